use super::*;
use crate::arith::{poly_parse, Fp32003, VarBlock};

fn ring(names: &[&str], order: Option<MonomialOrder>) -> Arc<PolyRing> {
    let blocks = vec![VarBlock::base("v", names.iter().copied())];
    match order {
        Some(o) => PolyRing::with_blocks(blocks, o).unwrap(),
        None => PolyRing::new(blocks).unwrap(),
    }
}

fn p<K: Field>(r: &Arc<PolyRing>, s: &str) -> Polynomial<K> {
    poly_parse(r, s).unwrap()
}

#[test]
fn lex_basis_of_circle_and_line() {
    let r = ring(&["x", "y"], Some(MonomialOrder::lex(2)));
    let i: Ideal = Ideal::new(&r, [p(&r, "x^2 + y^2 - 1"), p(&r, "x - y")]).unwrap();
    let gb = i.groebner_basis().unwrap();
    let got: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    assert_eq!(got, vec!["y^2 - 1/2", "x - y"]);
}

#[test]
fn twisted_cubic_degrevlex() {
    let r = ring(&["t", "x", "y", "z"], None);
    let i: Ideal = Ideal::new(&r, [p(&r, "x^2 - t*y"), p(&r, "x*y - t*z"), p(&r, "y^2 - x*z")]).unwrap();
    let gb = i.groebner_basis().unwrap();
    assert_eq!(gb.len(), 3);
    assert!(i.contains(&p(&r, "x^3 - t^2*z")).unwrap());
    assert!(!i.contains(&p(&r, "x*z - y")).unwrap());
}

#[test]
fn unit_ideal_and_zero_ideal() {
    let r = ring(&["x", "y"], None);
    let i: Ideal = Ideal::new(&r, [p(&r, "x*y - 1"), p(&r, "x")]).unwrap();
    assert!(i.is_unit().unwrap());
    let z: Ideal = Ideal::new(&r, [p(&r, "0")]).unwrap();
    assert!(z.is_zero());
    assert!(z.groebner_basis().unwrap().is_empty());
    assert!(z.contains(&p(&r, "0")).unwrap());
    assert!(!z.contains(&p(&r, "x")).unwrap());
}

#[test]
fn division_identity_holds() {
    let r = ring(&["x", "y", "z"], None);
    let f: Polynomial = p(&r, "x^3*y + 2*x*y*z - z^2 + 5");
    let basis = vec![p(&r, "x*y - z"), p(&r, "x^2 + 3*y")];
    let (q, rem) = divide(&f, &basis).unwrap();
    let mut acc = rem.clone();
    for (qi, bi) in q.iter().zip(&basis) {
        acc = &acc + &(qi * bi);
    }
    assert_eq!(acc, f);
}

#[test]
fn cache_is_per_order() {
    let r = ring(&["x", "y"], None);
    let i: Ideal = Ideal::new(&r, [p(&r, "x^2 - y"), p(&r, "x*y - x")]).unwrap();
    let a = i.groebner_basis().unwrap();
    let b = i.groebner_basis().unwrap();
    assert!(Arc::ptr_eq(&a, &b));
    let lex = i.groebner_basis_in(&MonomialOrder::lex(2)).unwrap();
    assert_eq!(lex.order(), &MonomialOrder::lex(2));
    for g in lex.elements() {
        assert!(i.contains(g).unwrap());
    }
}

#[test]
fn prime_field_agrees_on_binomials() {
    let r = ring(&["a", "b", "c", "d"], None);
    let q: Ideal = Ideal::new(&r, [p(&r, "a*d - b*c"), p(&r, "a*c - b^2")]).unwrap();
    let f: Ideal<Fp32003> = Ideal::new(&r, [p(&r, "a*d - b*c"), p(&r, "a*c - b^2")]).unwrap();
    let lq: Vec<_> = q.groebner_basis().unwrap().leading_monomials();
    let lf: Vec<_> = f.groebner_basis().unwrap().leading_monomials();
    assert_eq!(lq, lf);
}

#[test]
fn pair_limit_is_reported() {
    let r = ring(&["x", "y", "z"], None);
    let i: Ideal = Ideal::new(&r, [p(&r, "x^2 - y*z"), p(&r, "x*y - z^2"), p(&r, "y^2 - x*z + z")])
        .unwrap()
        .with_limits(GbLimits { max_pairs: 1, max_terms: 1000 });
    assert!(matches!(i.groebner_basis(), Err(Error::ComputationLimit(_))));
}

#[test]
fn tracked_cofactors_reconstruct_basis() {
    let r = ring(&["x", "y", "z"], None);
    let gens: Vec<Polynomial> = vec![p(&r, "x^2 - y*z"), p(&r, "x*y - z^2"), p(&r, "y^2 - x*z")];
    let (basis, cofs) = run_tracked(&r, &gens, GbLimits::default()).unwrap();
    for (g, row) in basis.iter().zip(&cofs) {
        let mut acc = Polynomial::zero(&r);
        for (c, f) in row.iter().zip(&gens) {
            acc = &acc + &(c * f);
        }
        assert_eq!(&acc, g);
    }
}
