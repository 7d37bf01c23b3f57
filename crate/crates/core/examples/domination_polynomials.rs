//! D and D_t by brute force and by the class engine, side by side.
//!
//! `cargo run --example domination_polynomials -- 20`

use std::time::Instant;

use zdpoly::domcount::{
    brute_force_poly, gamma_from_poly, ClassEngine, DominationKind, DEFAULT_BRUTE_LIMIT,
};
use zdpoly::zdgraph::ClassGraph;

fn main() -> zdpoly::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .map_or(20, |a| a.parse().expect("n must be an integer"));
    let cg = ClassGraph::build(n)?;
    let engine = ClassEngine::default();

    for kind in DominationKind::BOTH {
        let start = Instant::now();
        let poly = engine.poly(&cg, kind)?;
        let engine_time = start.elapsed();
        println!("{kind}(Γ(Z_{n})) = {poly}");
        println!(
            "  gamma = {:?}, {} sets, engine {engine_time:?}",
            gamma_from_poly(&poly),
            poly.evaluate_at(1)
        );

        match cg.expand(DEFAULT_BRUTE_LIMIT) {
            Ok(vg) => {
                let start = Instant::now();
                let brute = brute_force_poly(&vg, kind, DEFAULT_BRUTE_LIMIT)?;
                let verdict = if brute == poly { "agrees" } else { "DIFFERS" };
                println!("  brute force {verdict}, {:?}", start.elapsed());
            }
            Err(e) => println!("  brute force skipped: {e}"),
        }
    }
    Ok(())
}
