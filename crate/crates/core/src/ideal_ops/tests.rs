use super::*;
use crate::arith::{poly_parse, Rational};

fn xy_ring(n: usize) -> Arc<PolyRing> {
    PolyRing::new(vec![VarBlock::base(
        "base",
        (1..=n).map(|i| format!("x_{i}")).chain((1..=n).map(|i| format!("y_{i}"))),
    )])
    .unwrap()
}

fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    poly_parse(r, s).unwrap()
}

fn f(r: &Arc<PolyRing>, i: usize, j: usize) -> Polynomial {
    p(r, &format!("x_{i}*y_{j} - x_{j}*y_{i}"))
}

fn ideal(r: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(r, gens).unwrap()
}

#[test]
fn intersections() {
    let r = xy_ring(3);
    let a = intersect(&ideal(&r, vec![p(&r, "x_1")]), &ideal(&r, vec![p(&r, "y_1")])).unwrap();
    assert!(a.equals(&ideal(&r, vec![p(&r, "x_1*y_1")])).unwrap());
    let b = intersect(&ideal(&r, vec![f(&r, 1, 2)]), &ideal(&r, vec![f(&r, 1, 2), f(&r, 2, 3)])).unwrap();
    assert!(b.equals(&ideal(&r, vec![f(&r, 1, 2)])).unwrap());
    let c = intersect(&ideal(&r, vec![p(&r, "x_1*x_2")]), &ideal(&r, vec![p(&r, "x_2*x_3")])).unwrap();
    assert!(c.equals(&ideal(&r, vec![p(&r, "x_1*x_2*x_3")])).unwrap());
}

#[test]
fn colon_on_star_adds_leaf_edge() {
    let r = xy_ring(4);
    let i = ideal(&r, vec![f(&r, 1, 2), f(&r, 1, 3)]);
    let c = colon_by_poly(&i, &f(&r, 1, 4)).unwrap();
    assert!(c.equals(&ideal(&r, vec![f(&r, 1, 2), f(&r, 1, 3), f(&r, 2, 3)])).unwrap());
    let own = colon_by_poly(&ideal(&r, vec![f(&r, 1, 2)]), &f(&r, 1, 2)).unwrap();
    assert!(own.is_unit().unwrap());
}

#[test]
fn colon_by_ideals() {
    let r = xy_ring(2);
    let i = ideal(&r, vec![p(&r, "x_1*y_1")]);
    let j = ideal(&r, vec![p(&r, "x_1"), p(&r, "y_1")]);
    assert!(colon_by_ideal(&i, &j).unwrap().equals(&i).unwrap());
    assert!(colon_by_ideal(&i, &Ideal::unit(&r)).unwrap().equals(&i).unwrap());
}

#[test]
fn saturation_indices() {
    let r = xy_ring(2);
    let (s, k) = saturate_by_poly(&ideal(&r, vec![p(&r, "x_1^2")]), &p(&r, "x_1")).unwrap();
    assert!(s.is_unit().unwrap());
    assert_eq!(k, 2);
    let i = ideal(&r, vec![f(&r, 1, 2)]);
    let (s, k) = saturate_by_poly(&i, &p(&r, "3")).unwrap();
    assert!(s.equals(&i).unwrap());
    assert_eq!(k, 1);
}

#[test]
fn koszul_relation_from_elimination() {
    let r0 = xy_ring(3);
    let r = r0
        .with_block_appended(
            VarBlock::fiber("fiber", ["X_1_2", "X_2_3"]),
            MonomialOrder::degrevlex(8),
            None,
        )
        .unwrap()
        .with_block_appended(VarBlock::base("t", ["t"]), MonomialOrder::degrevlex(9), None)
        .unwrap();
    let i = ideal(
        &r,
        vec![p(&r, "X_1_2 - (x_1*y_2 - x_2*y_1)*t"), p(&r, "X_2_3 - (x_2*y_3 - x_3*y_2)*t")],
    );
    let e = eliminate(&i, &[8]).unwrap();
    let want = p(e.ring(), "(x_2*y_3 - x_3*y_2)*X_1_2 - (x_1*y_2 - x_2*y_1)*X_2_3");
    assert!(e.equals(&Ideal::new(e.ring(), [want]).unwrap()).unwrap());
    for g in e.generators() {
        assert!(e.ring().var_index("t").is_none());
        assert!(g.ring().var_names().iter().all(|n| n != "t"));
    }
    let single = ideal(&r, vec![p(&r, "X_1_2 - (x_1*y_2 - x_2*y_1)*t")]);
    assert!(eliminate(&single, &[8]).unwrap().is_zero());
}

#[test]
fn products_and_powers() {
    let r = xy_ring(3);
    let a = ideal(&r, vec![p(&r, "x_1")]);
    let b = ideal(&r, vec![p(&r, "y_1")]);
    assert_eq!(product_power(&a, &b, 1).unwrap().generators(), &[p(&r, "x_1*y_1")]);
    let j = ideal(&r, vec![f(&r, 1, 2), f(&r, 2, 3)]);
    assert_eq!(ideal_power(&j, 2).unwrap().generators().len(), 3);
    assert!(ideal_power(&j, 0).unwrap().is_unit().unwrap());
}

#[test]
fn syzygy_examples() {
    let r = xy_ring(3);
    let gens = vec![f(&r, 1, 2), f(&r, 2, 3)];
    let syz = syzygies_first(&gens).unwrap();
    assert!(!syz.is_empty());
    for s in &syz {
        assert!(s.evaluate(&gens).unwrap().is_zero());
    }
    // The Koszul relation lies in the module generated by the result.
    let koszul = Syzygy { coefficients: vec![f(&r, 2, 3), -&f(&r, 1, 2)] };
    assert!(syz.iter().any(|s| {
        let c = &s.coefficients;
        // regular sequence: every syzygy is a multiple of the Koszul one
        c[0].is_zero() || {
            let (q, rem) = divide(&c[0], &[f(&r, 2, 3)]).unwrap();
            rem.is_zero() && q[0].is_constant()
        }
    }));
    assert!(koszul.evaluate(&gens).unwrap().is_zero());
    assert!(syzygies_first(&[f(&r, 1, 2)]).unwrap().is_empty());
    let rep = syzygies_first(&[p(&r, "x_1"), p(&r, "x_1")]).unwrap();
    assert!(rep.iter().any(|s| {
        s.coefficients[0].is_constant() && s.coefficients[0] == -&s.coefficients[1]
    }));
}

#[test]
fn graded_membership_examples() {
    let r0 = xy_ring(3);
    let r = r0
        .with_block_appended(
            VarBlock::fiber("fiber", ["X_1_2", "X_2_3"]),
            MonomialOrder::degrevlex(8),
            None,
        )
        .unwrap();
    let rel = p(&r, "(x_2*y_3 - x_3*y_2)*X_1_2 - (x_1*y_2 - x_2*y_1)*X_2_3");
    assert!(graded_membership(&rel, std::slice::from_ref(&rel), (2, 1)).unwrap());
    assert!(!graded_membership(&p(&r, "X_1_2^2"), &[f(&r, 1, 2).map_into(&r).unwrap()], (0, 2)).unwrap());
    assert!(graded_membership(&p(&r, "X_1_2"), &[rel], (2, 1)).is_err());
    let twice = &rel_ring_helper(&r) * &p(&r, "x_1");
    assert!(graded_membership(&twice, &[rel_ring_helper(&r)], (3, 1)).unwrap());
    let _ = Rational::from(1);
}

fn rel_ring_helper(r: &Arc<PolyRing>) -> Polynomial {
    p(r, "(x_2*y_3 - x_3*y_2)*X_1_2 - (x_1*y_2 - x_2*y_1)*X_2_3")
}
