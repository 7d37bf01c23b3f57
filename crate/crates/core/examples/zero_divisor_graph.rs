//! Class quotient and explicit vertex graph of Γ(Z_n).
//!
//! `cargo run --example zero_divisor_graph -- 75`

use zdpoly::zdgraph::ClassGraph;

fn main() -> zdpoly::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .map_or(75, |a| a.parse().expect("n must be an integer"));
    let cg = ClassGraph::build(n)?;

    println!(
        "Γ(Z_{n}): {} vertices, {} edges",
        cg.vertex_count(),
        cg.edge_count()
    );
    for class in cg.classes() {
        let shape = if class.is_clique {
            "clique"
        } else {
            "independent"
        };
        println!("  V_{:<4} size {:<4} {shape}", class.divisor, class.size);
    }
    for (i, j) in cg.adjacent_pairs() {
        println!(
            "  V_{} -- V_{}",
            cg.classes()[i].divisor,
            cg.classes()[j].divisor
        );
    }

    if cg.vertex_count() <= 12 {
        let vg = cg.expand(12)?;
        print!("\n{}", vg.to_dot());
    }
    Ok(())
}
