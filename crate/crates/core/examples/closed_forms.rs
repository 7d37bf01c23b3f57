//! Family classification and the closed-form polynomials, checked against the
//! class engine.
//!
//! `cargo run --example closed_forms -- 6 9 15 27 45 105`

use zdpoly::closedform::closed_form;
use zdpoly::domcount::{class_engine_poly, DominationKind};
use zdpoly::numtheory::{classify_family, factorize};
use zdpoly::zdgraph::ClassGraph;
use zdpoly::Error;

fn main() -> zdpoly::Result<()> {
    let mut moduli: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    if moduli.is_empty() {
        moduli = vec![6, 9, 15, 27, 45, 60, 105];
    }
    for n in moduli {
        let tag = classify_family(&factorize(n)?);
        println!("n = {n}: {tag}");
        let cg = ClassGraph::build(n)?;
        for kind in DominationKind::BOTH {
            match closed_form(n, tag, kind) {
                Ok(result) => {
                    let engine = class_engine_poly(&cg, kind)?;
                    let status = if engine == result.polynomial {
                        "matches engine"
                    } else {
                        "differs from engine"
                    };
                    println!("  {kind} {status}: {}", result.polynomial);
                }
                Err(Error::UnsupportedFamily(_)) => println!("  {kind}: no closed form"),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
