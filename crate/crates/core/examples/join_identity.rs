//! Domination polynomial of a join from the parts, checked by brute force.

use zdpoly::closedform::{complete_graph_polys, join_domination, star_polys};
use zdpoly::domcount::{brute_force_poly, DominationKind};
use zdpoly::zdgraph::VertexGraph;
use zdpoly::Polynomial;

fn main() -> zdpoly::Result<()> {
    // K_3 joined with the edgeless graph on 2 vertices
    let (k3, _) = complete_graph_polys(3);
    let empty2 = Polynomial::x_pow(2);
    let formula = join_domination(&k3, &empty2, 3, 2);

    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    edges.extend((0..3).flat_map(|u| [(u, 3), (u, 4)]));
    let g = VertexGraph::from_edges(5, &edges)?;
    let brute = brute_force_poly(&g, DominationKind::Ordinary, 63)?;
    println!("join formula: {formula}");
    println!("brute force:  {brute}");
    assert_eq!(formula, brute);

    let (star, star_total) = star_polys(4);
    println!("star K_1,4: D = {star}, Dt = {star_total}");
    Ok(())
}
