//! Gröbner bases, membership and the basic ideal operations on a small ring.

use bei::arith::{poly_parse, MonomialOrder, PolyRing, Polynomial, VarBlock};
use bei::groebner::Ideal;
use bei::ideal_ops::{colon_by_poly, intersect, saturate_by_poly};

fn main() -> bei::Result<()> {
    let r = PolyRing::new(vec![VarBlock::base("base", ["a", "b", "c"])])?;
    let p = |s: &str| -> bei::Result<Polynomial> { poly_parse(&r, s) };
    let i = Ideal::new(&r, [p("a*b - c^2")?, p("a^2")?])?;

    println!("degrevlex basis:");
    for g in i.groebner_basis()?.elements() {
        println!("  {g}");
    }
    println!("lex basis:");
    for g in i.groebner_basis_in(&MonomialOrder::lex(3))?.elements() {
        println!("  {g}");
    }

    for q in ["c^4", "c^3", "a*c^2"] {
        println!("{q} in I: {}", i.contains(&p(q)?)?);
    }

    let j = Ideal::new(&r, [p("b")?])?;
    println!("I ∩ (b): {:?}", strings(&intersect(&i, &j)?));
    println!("I : a = {:?}", strings(&colon_by_poly(&i, &p("a")?)?));
    let (sat, steps) = saturate_by_poly(&i, &p("a")?)?;
    println!("I : a^∞ = {:?} after {steps} steps", strings(&sat));
    Ok(())
}

fn strings(i: &Ideal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}
