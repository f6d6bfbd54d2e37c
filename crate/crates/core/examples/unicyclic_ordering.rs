//! A tree closed into a unicyclic graph by an edge between two pendant vertices.

use bei::arith::Polynomial;
use bei::bei::edge_binomials;
use bei::graphs::{unicyclic_edge_ordering, unicyclic_rooting, Edge};
use bei::repro::reference_tree;
use bei::sequences::is_p_sequence;

fn main() -> bei::Result<()> {
    for closing in [Edge(4, 10), Edge(8, 10), Edge(6, 7)] {
        let g = reference_tree().with_edge(closing)?;
        match unicyclic_rooting(&g) {
            Ok((rt, e)) => {
                let o = unicyclic_edge_ordering(&g)?;
                let z: Vec<Polynomial> = edge_binomials(&g, Some(&o))?.into_iter().map(|b| b.polynomial).collect();
                let shown: Vec<String> = o.edges.iter().map(|e| e.to_string()).collect();
                println!("+{closing}: root {}, closing edge {e}", rt.root());
                println!("  order {}", shown.join(" "));
                println!("  p-sequence: {}", is_p_sequence(&z)?.verdict);
            }
            Err(err) => println!("+{closing}: {err}"),
        }
    }
    Ok(())
}
