//! Colon of a binomial edge ideal by the binomial of a non-edge: closed form
//! against direct computation.

use bei::bei::{binomial_edge_ideal, colon_bridge_formula, colon_path_formula, edge_binomial};
use bei::graphs::{graph_from_edges, Edge};
use bei::groebner::Ideal;
use bei::ideal_ops::colon_by_poly;

fn main() -> bei::Result<()> {
    // A tree with one isolated vertex, so both the path and the bridge case occur.
    let g = graph_from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5)])?;
    let j: Ideal = binomial_edge_ideal(&g, None)?;
    for e in [Edge(1, 4), Edge(4, 5), Edge(1, 6)] {
        let f = edge_binomial(j.ring(), e)?;
        let formula: Ideal = if g.simple_paths(e.0, e.1, None).is_empty() {
            colon_bridge_formula(&g, e)?
        } else {
            colon_path_formula(&g, e, None)?
        };
        let direct = colon_by_poly(&j, &f)?;
        println!("J : f_{e}  ({} generators, matches direct colon: {})", formula.generators().len(), formula.equals(&direct)?);
        for h in formula.generators() {
            println!("  {h}");
        }
    }
    Ok(())
}
