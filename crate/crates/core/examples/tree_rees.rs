//! Rees algebra of a tree's binomial edge ideal: the kernel equals the
//! symmetric ideal, and the explicit generators span it.

use bei::bei::edge_binomials;
use bei::graphs::{graph_from_edges, star};
use bei::groebner::Ideal;
use bei::rees::{linear_type_of, tree_rees_generators, ReesSetup};

fn main() -> bei::Result<()> {
    for g in [star(3), graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (3, 5)])?] {
        let setup: ReesSetup = ReesSetup::for_edges(&edge_binomials(&g, None)?)?;
        let res = linear_type_of(&setup)?;
        let gens = tree_rees_generators(&setup, &g)?;
        let spans = Ideal::new(setup.ring(), gens.clone())?.equals(&res.kernel)?;
        println!("{}: linear type {}, relation type {}", g.to_json(), res.linear_type, res.relation_type);
        println!("  {} explicit generators, equal to the kernel: {spans}", gens.len());
        for p in gens.iter().take(4) {
            println!("  {p}");
        }
    }
    Ok(())
}
