//! The double broom: its edge binomials form a p-sequence in the level order,
//! yet no ordering makes them a d-sequence.

use bei::arith::Polynomial;
use bei::bei::edge_binomials;
use bei::graphs::{double_broom, tree_edge_ordering};
use bei::sequences::{is_p_sequence, permutation_sample, permutation_scan, Property};

fn main() -> bei::Result<()> {
    let g = double_broom(2);
    println!("graph: {}", g.to_json());
    let o = tree_edge_ordering(&g, None)?.ordering();
    let z: Vec<Polynomial> = edge_binomials(&g, Some(&o))?.into_iter().map(|b| b.polynomial).collect();
    println!("level order is a p-sequence: {}", is_p_sequence(&z)?.verdict);

    let scan = permutation_scan(&z, Property::D, 5040)?;
    let good = scan.verdicts.iter().filter(|v| v.verdict).count();
    println!("d-sequence orderings: {good} of {} (exhaustive: {})", scan.verdicts.len(), scan.exhaustive);

    let sample = permutation_sample(&z, Property::P, 200, 1)?;
    let good = sample.verdicts.iter().filter(|v| v.verdict).count();
    println!("p-sequence orderings in a sample: {good} of {}", sample.verdicts.len());
    Ok(())
}
