mod common;

use std::sync::Arc;

use bei::arith::{poly_parse, Monomial, PolyRing, Polynomial, Rational, VarBlock};
use bei::bei::{binomial_edge_ideal, colon_bridge_formula, colon_path_formula, edge_binomial, edge_binomials};
use bei::graphs::{graph_from_edges, parse_graph, tree_edge_ordering, unicyclic_edge_ordering, Edge, Graph};
use bei::groebner::Ideal;
use bei::ideal_ops::colon_by_poly;
use bei::rees::{is_linear_type, tree_rees_generators, ReesSetup};
use bei::repro::{random_homogeneous, random_polys, random_ring};
use bei::sequences::{
    eq23_containment_check, is_d_sequence, is_p_sequence, monomial_p_criterion, permutation_scan, verify_witness,
    Property,
};
use common::{mono, sparse, Graded};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(n: usize) -> Arc<PolyRing> {
    PolyRing::new(vec![VarBlock::base("base", (1..=n).map(|i| format!("v{i}")))]).unwrap()
}

fn monomials(r: &Arc<PolyRing>, exps: &[Vec<u16>]) -> Vec<Polynomial> {
    exps.iter()
        .map(|e| Polynomial::monomial(r, Rational::integer(1), Monomial::from_exponents(e)))
        .collect()
}

/// Nonconstant exponent vectors on `n` variables.
fn mono_seq(n: usize, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<u16>>> {
    prop::collection::vec(prop::collection::vec(0u16..3, n), len)
        .prop_filter("nonconstant", |v| v.iter().all(|e| e.iter().any(|&x| x > 0)))
}

fn tree_from_pruefer(code: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    graph_from_edges(n, edges).unwrap()
}

fn labeled_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| prop::collection::vec(1..=n, n - 2).prop_map(move |c| tree_from_pruefer(&c, n)))
}

fn binomials(g: &Graph, order: &[Edge]) -> Vec<Polynomial> {
    let o = bei::graphs::EdgeOrdering::new(order.to_vec());
    edge_binomials(g, Some(&o)).unwrap().into_iter().map(|b| b.polynomial).collect()
}

fn as_u32(e: &[Vec<u16>]) -> Vec<Vec<u32>> {
    e.iter().map(|v| v.iter().map(|&x| u32::from(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn monomial_verdicts_match_definition(exps in mono_seq(4, 2..5)) {
        let r = ring(4);
        let z = monomials(&r, &exps);
        let ms = as_u32(&exps);
        prop_assert_eq!(is_p_sequence(&z).unwrap().verdict, mono::is_p_sequence(&ms));
        prop_assert_eq!(is_d_sequence(&z).unwrap().verdict, mono::is_d_sequence(&ms));
    }

    #[test]
    fn gcd_criterion_is_sufficient(exps in mono_seq(5, 2..5)) {
        let z = monomials(&ring(5), &exps);
        if monomial_p_criterion(&z).unwrap().verdict {
            prop_assert!(mono::is_p_sequence(&as_u32(&exps)));
        }
    }

    #[test]
    fn witnesses_are_sound(exps in mono_seq(4, 2..5)) {
        let z = monomials(&ring(4), &exps);
        for rep in [is_p_sequence(&z).unwrap(), is_d_sequence(&z).unwrap()] {
            prop_assert_eq!(rep.verdict, rep.witness.is_none());
            if let Some(w) = rep.witness {
                prop_assert!(verify_witness(&z, &w).unwrap());
            }
        }
    }

    #[test]
    fn scan_agrees_with_reordered_checks(exps in mono_seq(3, 2..4)) {
        let z = monomials(&ring(3), &exps);
        let scan = permutation_scan(&z, Property::P, 8).unwrap();
        prop_assert!(scan.exhaustive);
        for v in &scan.verdicts {
            let perm: Vec<Polynomial> = v.permutation.iter().map(|&k| z[k - 1].clone()).collect();
            prop_assert_eq!(v.verdict, is_p_sequence(&perm).unwrap().verdict);
        }
        prop_assert_eq!(scan.any_true, scan.verdicts.iter().any(|v| v.verdict));
    }

    #[test]
    fn first_containment_position_is_trivial(exps in mono_seq(3, 2..4), s in 1u32..3) {
        let z = monomials(&ring(3), &exps);
        prop_assert!(eq23_containment_check(&z, 1, s).unwrap().holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn tree_orderings_are_p_sequences(g in labeled_tree(7)) {
        let rt = tree_edge_ordering(&g, None).unwrap();
        let es = rt.ordered_edges();
        // Each edge meets the earlier ones in at most one vertex, and its parent end first.
        for (k, e) in es.iter().enumerate().skip(1) {
            let seen = |v: usize| es[..k].iter().any(|d| d.contains(v));
            prop_assert!(seen(e.0) != seen(e.1));
        }
        prop_assert!(is_p_sequence(&binomials(&g, es)).unwrap().verdict);
    }

    #[test]
    fn pendant_closures_are_p_sequences(g in labeled_tree(7), pick in any::<prop::sample::Index>()) {
        let p = g.pendant_vertices();
        let pairs: Vec<Edge> = p.iter().enumerate()
            .flat_map(|(a, &u)| p[a + 1..].iter().map(move |&v| Edge::new(u, v).unwrap()))
            .collect();
        prop_assume!(!pairs.is_empty());
        let h = g.with_edge(pairs[pick.index(pairs.len())]).unwrap();
        prop_assert!(h.is_unicyclic());
        if let Ok(o) = unicyclic_edge_ordering(&h) {
            let last = *o.edges.last().unwrap();
            prop_assert!(!h.is_bridge(last));
            prop_assert!(h.without_edge(last).is_tree());
            prop_assert!(is_p_sequence(&binomials(&h, &o.edges)).unwrap().verdict);
        }
    }

    #[test]
    fn colon_formulas_match(g in labeled_tree(6), extra in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>(), cyc in any::<bool>()) {
        let non: Vec<Edge> = (1..=g.n())
            .flat_map(|i| (i + 1..=g.n()).map(move |j| Edge(i, j)))
            .filter(|e| !g.contains_edge(*e))
            .collect();
        prop_assume!(non.len() >= 2);
        let (g, non) = if cyc {
            let add = non[extra.index(non.len())];
            let h = g.with_edge(add).unwrap();
            (h, non.into_iter().filter(|e| *e != add).collect::<Vec<_>>())
        } else {
            (g, non)
        };
        let e = non[pick.index(non.len())];
        let formula: Ideal = if g.simple_paths(e.0, e.1, None).is_empty() {
            colon_bridge_formula(&g, e).unwrap()
        } else {
            colon_path_formula(&g, e, None).unwrap()
        };
        let j: Ideal = binomial_edge_ideal(&g, None).unwrap();
        let f = edge_binomial(j.ring(), e).unwrap();
        prop_assert!(formula.equals(&colon_by_poly(&j, &f).unwrap()).unwrap());
        let oracle = Graded::from_polys(j.ring().gradings().to_vec(), j.generators());
        let sf = sparse(&f);
        for h in formula.generators() {
            prop_assert!(oracle.contains(&common::mul(&sparse(h), &sf)));
        }
    }

    #[test]
    fn trees_are_of_linear_type(g in labeled_tree(5)) {
        let bs = edge_binomials::<Rational>(&g, None).unwrap();
        let setup = ReesSetup::for_edges(&bs).unwrap();
        let polys: Vec<Polynomial> = bs.iter().map(|b| b.polynomial.clone()).collect();
        prop_assert!(is_linear_type(&polys).unwrap().linear_type);
        let kernel = setup.kernel().unwrap();
        let sym = setup.sym().unwrap();
        prop_assert!(kernel.contains_ideal(sym).unwrap());
        let gens = tree_rees_generators(&setup, &g).unwrap();
        prop_assert!(Ideal::new(setup.ring(), gens).unwrap().equals(kernel).unwrap());
        prop_assert!(kernel.generators().iter().all(|k| common::evaluates_to_zero(&setup, k)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_ring(&mut rng);
        let gens = random_polys(&mut rng, &r, 3, 2, true);
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let oracle = Graded::from_polys(vec![vec![1; r.nvars()]], &gens);
        for deg in 2..=3u16 {
            let q = random_homogeneous(&mut rng, &r, deg);
            prop_assume!(!q.is_zero());
            prop_assert_eq!(ideal.contains(&q).unwrap(), oracle.contains_poly(&q));
            // Combinations of the generators are always members.
            let mut comb = Polynomial::zero(&r);
            for g in &gens {
                let d = g.total_degree().unwrap();
                if u32::from(deg) >= d {
                    let c = random_homogeneous(&mut rng, &r, deg - d as u16);
                    comb = comb.try_add(&c.try_mul(g).unwrap()).unwrap();
                }
            }
            prop_assert!(ideal.contains(&comb).unwrap());
            prop_assert!(oracle.contains_poly(&comb));
        }
    }

    #[test]
    fn graph_json_round_trips(g in labeled_tree(9)) {
        prop_assert_eq!(parse_graph(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn polynomials_round_trip_through_text(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_ring(&mut rng);
        for p in random_polys(&mut rng, &r, 3, 3, false) {
            prop_assert_eq!(poly_parse::<Rational>(&r, &p.to_string()).unwrap(), p);
        }
    }
}

#[test]
fn oracle_detects_non_members() {
    let r = ring(3);
    let g: Vec<Polynomial> = ["v1*v2 - v3^2", "v1^2"].iter().map(|s| poly_parse(&r, s).unwrap()).collect();
    let o = Graded::from_polys(vec![vec![1; 3]], &g);
    assert!(o.contains_poly(&poly_parse::<Rational>(&r, "v1^2*v3 + v1^2*v2 - v1*v3^2").unwrap()));
    // v3^4 = (v3^2 - v1*v2)(v3^2 + v1*v2) + v1^2*v2^2.
    assert!(o.contains_poly(&poly_parse::<Rational>(&r, "v3^4").unwrap()));
    assert!(!o.contains_poly(&poly_parse::<Rational>(&r, "v2^2").unwrap()));
    assert!(!o.contains_poly(&poly_parse::<Rational>(&r, "v3^3").unwrap()));
    // (v1^2) : v1 = (v1) in degree 1.
    let m = Graded::from_polys(vec![vec![1; 3]], &g[1..]);
    assert_eq!(m.colon_dim(&sparse(&poly_parse::<Rational>(&r, "v1").unwrap()), &[1]), 1);
}
