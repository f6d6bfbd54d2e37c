//! Level ordering of a rooted tree and the p-sequence check on its edge binomials.

use bei::arith::Polynomial;
use bei::bei::edge_binomials;
use bei::graphs::{tree_edge_ordering, EdgeOrdering};
use bei::repro::reference_tree;
use bei::sequences::{is_d_sequence, is_p_sequence};

fn main() -> bei::Result<()> {
    let g = reference_tree();
    let rt = tree_edge_ordering(&g, Some(1))?;
    let order = rt.ordering();
    let shown: Vec<String> = rt.ordered_edges().iter().map(|e| format!("{e}@{}", rt.edge_level(*e))).collect();
    println!("level ordering (edge@level): {}", shown.join(" "));

    let z: Vec<Polynomial> = edge_binomials(&g, Some(&order))?.into_iter().map(|b| b.polynomial).collect();
    println!("p-sequence: {}", is_p_sequence(&z)?.verdict);
    println!("d-sequence: {}", is_d_sequence(&z)?.verdict);

    // Reversing the order usually breaks it.
    let rev = EdgeOrdering::new(rt.ordered_edges().iter().rev().copied().collect());
    let z: Vec<Polynomial> = edge_binomials(&g, Some(&rev))?.into_iter().map(|b| b.polynomial).collect();
    let rep = is_p_sequence(&z)?;
    println!("reversed order p-sequence: {}", rep.verdict);
    if let Some(w) = rep.witness {
        println!("  failing condition {:?} at {:?}: {}", w.condition, w.indices, w.element);
    }
    Ok(())
}
