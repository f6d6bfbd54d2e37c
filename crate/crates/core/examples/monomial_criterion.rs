//! The gcd criterion for monomial sequences, and a monomial d-sequence that is
//! a p-sequence in no order.

use bei::arith::{poly_parse, PolyRing, Polynomial, VarBlock};
use bei::repro::monomial_triple;
use bei::sequences::{is_d_sequence, monomial_p_criterion, permutation_scan, Property};

fn main() -> bei::Result<()> {
    let r = PolyRing::new(vec![VarBlock::base("base", ["a", "b", "c", "d"])])?;
    let good = ["a^2", "b*c", "c*d"].iter().map(|s| poly_parse(&r, s)).collect::<bei::Result<Vec<Polynomial>>>()?;
    let rep = monomial_p_criterion(&good)?;
    println!("a^2, b*c, c*d: criterion {} {:?}", rep.verdict, rep.failing);

    let z = monomial_triple();
    let shown: Vec<String> = z.iter().map(|m| m.to_string()).collect();
    println!("{}", shown.join(", "));
    println!("  d-sequence: {}", is_d_sequence(&z)?.verdict);
    println!("  criterion: {:?}", monomial_p_criterion(&z)?.failing);
    let scan = permutation_scan(&z, Property::P, 6)?;
    for v in &scan.verdicts {
        println!("  order {:?}: p-sequence {}", v.permutation, v.verdict);
    }
    Ok(())
}
