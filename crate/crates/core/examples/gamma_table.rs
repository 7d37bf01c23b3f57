//! Domination and total domination numbers over a range of moduli, using the
//! engine summary so no polynomial is materialized.
//!
//! `cargo run --release --example gamma_table -- 4 60`

use zdpoly::domcount::{ClassEngine, DominationKind};
use zdpoly::numtheory::{classify_family, factorize};
use zdpoly::zdgraph::ClassGraph;

fn main() -> zdpoly::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer"));
    let from = args.next().unwrap_or(4);
    let to = args.next().unwrap_or(60);
    let engine = ClassEngine::default();

    println!(
        "{:>6} {:<20} {:>6} {:>6} {:>8}",
        "n", "family", "|V|", "gamma", "gamma_t"
    );
    for n in from.max(2)..=to {
        let cg = ClassGraph::build(n)?;
        if cg.is_empty() {
            continue;
        }
        let family = classify_family(&factorize(n)?);
        let g = engine.summary(&cg, DominationKind::Ordinary)?.gamma;
        let gt = engine.summary(&cg, DominationKind::Total)?.gamma;
        let show = |v: Option<usize>| v.map_or("undef".to_string(), |v| v.to_string());
        println!(
            "{n:>6} {:<20} {:>6} {:>6} {:>8}",
            family.family.to_string(),
            cg.vertex_count(),
            show(g),
            show(gt)
        );
    }
    Ok(())
}
