//! The per-class band view of dominating sets: each class contributes none,
//! one, some or all of its vertices, and validity is decided per pattern.

use zdpoly::domcount::{
    band_enumeration_poly, class_engine_poly, pattern_valid, Band, DominationKind,
    PatternAssignment,
};
use zdpoly::zdgraph::ClassGraph;

fn main() -> zdpoly::Result<()> {
    let cg = ClassGraph::build(27)?;
    let sizes: Vec<u64> = cg.classes().iter().map(|c| c.size).collect();
    println!(
        "Z_27 classes: {:?} with sizes {sizes:?}",
        cg.classes().iter().map(|c| c.divisor).collect::<Vec<_>>()
    );

    for kind in DominationKind::BOTH {
        println!("{kind}:");
        for &a in Band::for_size(sizes[0]) {
            for &b in Band::for_size(sizes[1]) {
                let pattern = PatternAssignment(vec![a, b]);
                if pattern_valid(&pattern, &cg, kind) {
                    println!(
                        "  ({a:?}, {b:?}) contributes {}",
                        &a.generating_poly(sizes[0]) * &b.generating_poly(sizes[1])
                    );
                }
            }
        }
        let by_bands = band_enumeration_poly(&cg, kind, 8)?;
        assert_eq!(by_bands, class_engine_poly(&cg, kind)?);
        println!("  sum = {by_bands}");
    }
    Ok(())
}
