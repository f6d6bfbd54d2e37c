//! Checking the containment (z_i) ∩ P^s Q ⊆ z_i P^(s-1) Q, where P is
//! generated by the earlier elements and Q by all but z_i. It fails for a
//! p-sequence although d-sequences always satisfy it.

use bei::arith::Polynomial;
use bei::bei::edge_binomials;
use bei::graphs::unicyclic_edge_ordering;
use bei::repro::containment_graph;
use bei::sequences::{eq23_containment_check, is_p_sequence};

fn main() -> bei::Result<()> {
    let (g, listed) = containment_graph();
    for (name, o) in [("listed", listed), ("unicyclic", unicyclic_edge_ordering(&g)?)] {
        let z: Vec<Polynomial> = edge_binomials(&g, Some(&o))?.into_iter().map(|b| b.polynomial).collect();
        let shown: Vec<String> = o.edges.iter().map(|e| e.to_string()).collect();
        let rep = is_p_sequence(&z)?;
        println!("{name} order {}: p-sequence {}", shown.join(" "), rep.verdict);
        if let Some(w) = rep.witness {
            println!("  fails {:?} at {:?} with {}", w.condition, w.indices, w.element);
        }
        for i in 1..=z.len() {
            let rep = eq23_containment_check(&z, i, 2)?;
            match rep.witness {
                Some(w) => println!("  i={i} s=2: fails, witness has {} terms", w.terms().len()),
                None => println!("  i={i} s=2: holds"),
            }
        }
    }
    Ok(())
}
