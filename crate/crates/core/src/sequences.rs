//! Decision procedures for d- and p-sequences, permutation scans, the gcd
//! criterion for monomial sequences and the power containment test.
//!
//! Indices in reports are 1-based positions in the sequence as given.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{Field, PolyRing, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{colon_by_poly, intersect, product_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    P,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `z_j` lies in the ideal of the other entries; indices are `(j, j, j)`.
    Minimal,
    /// `(z_1..z_i) : z_{i1} z_{i2} ≠ (z_1..z_i) : z_{i1}`; indices `(i, i1, i2)`.
    PColon,
    /// `(z_1..z_i) : z_{i+1} z_j ≠ (z_1..z_i) : z_j`; indices `(i, i+1, j)`.
    DColon,
}

/// A failed condition together with an element separating the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<K: Field = Rational> {
    pub condition: Condition,
    pub indices: (usize, usize, usize),
    pub element: Polynomial<K>,
}

impl<K: Field> Witness<K> {
    /// For colon conditions: the position `s` with `element ∉ prefix : z_s` and
    /// the extra factor `e` with `element · z_s · z_e ∈ prefix`.
    fn colon_positions(&self) -> (usize, usize, usize) {
        let (i, a, b) = self.indices;
        match self.condition {
            Condition::PColon => (i, a, b),
            Condition::DColon => (i, b, a),
            Condition::Minimal => (0, a, a),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "condition": self.condition,
            "indices": [self.indices.0, self.indices.1, self.indices.2],
            "element": self.element.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport<K: Field = Rational> {
    pub verdict: bool,
    pub witness: Option<Witness<K>>,
}

impl<K: Field> SequenceReport<K> {
    fn from_witness(witness: Option<Witness<K>>) -> Self {
        SequenceReport {
            verdict: witness.is_none(),
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

/// Colon ideals of prefixes of a fixed generator list, keyed by the prefix as a set.
struct ColonTable<K: Field> {
    ring: Arc<PolyRing>,
    z: Vec<Polynomial<K>>,
    colons: HashMap<(u64, usize), Arc<Ideal<K>>>,
    checks: HashMap<(u64, usize, usize), Option<Polynomial<K>>>,
    minimal: Option<Option<Witness<K>>>,
}

impl<K: Field> ColonTable<K> {
    fn new(z: &[Polynomial<K>]) -> Result<Self> {
        let Some(first) = z.first() else {
            return Err(Error::Usage("empty sequence".into()));
        };
        if z.len() > 64 {
            return Err(Error::ComputationLimit("sequences longer than 64 are not supported".into()));
        }
        let ring = first.ring().clone();
        let z: Vec<Polynomial<K>> = z.iter().map(|p| p.map_into(&ring)).collect::<Result<_>>()?;
        if let Some(k) = z.iter().position(Polynomial::is_zero) {
            return Err(Error::Usage(format!("entry {} is zero", k + 1)));
        }
        Ok(ColonTable {
            ring,
            z,
            colons: HashMap::new(),
            checks: HashMap::new(),
            minimal: None,
        })
    }

    fn ideal_of(&self, mask: u64) -> Result<Ideal<K>> {
        let gens = (0..self.z.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.z[k].clone());
        Ideal::new(&self.ring, gens)
    }

    /// `(z_k : k ∈ mask) : z_s`.
    fn colon(&mut self, mask: u64, s: usize) -> Result<Arc<Ideal<K>>> {
        if let Some(c) = self.colons.get(&(mask, s)) {
            return Ok(c.clone());
        }
        let c = Arc::new(colon_by_poly(&self.ideal_of(mask)?, &self.z[s])?);
        self.colons.insert((mask, s), c.clone());
        Ok(c)
    }

    /// Checks `(P : z_s) : z_e ⊆ P : z_s`; returns a generator of the left side outside the right.
    fn check(&mut self, mask: u64, s: usize, e: usize) -> Result<Option<Polynomial<K>>> {
        if mask == 0 {
            // Polynomial rings are domains: 0 : anything = 0.
            return Ok(None);
        }
        if let Some(r) = self.checks.get(&(mask, s, e)) {
            return Ok(r.clone());
        }
        let a = self.colon(mask, s)?;
        let out = if a.is_unit()? {
            None
        } else {
            let b = colon_by_poly(&a, &self.z[e])?;
            let gb = a.groebner_basis()?;
            let mut bad = None;
            for g in b.generators() {
                if !gb.contains(g)? {
                    bad = Some(g.clone());
                    break;
                }
            }
            bad
        };
        self.checks.insert((mask, s, e), out.clone());
        Ok(out)
    }

    /// First entry lying in the ideal of the others. Independent of the order.
    fn minimal(&mut self) -> Result<Option<Witness<K>>> {
        if let Some(m) = &self.minimal {
            return Ok(m.clone());
        }
        if let Some(k) = self.z.iter().position(|p| !p.is_homogeneous()) {
            return Err(Error::Usage(format!(
                "entry {} is not homogeneous; minimal generation is only decided for graded input",
                k + 1
            )));
        }
        let all = if self.z.len() == 64 { u64::MAX } else { (1u64 << self.z.len()) - 1 };
        let mut found = None;
        for j in 0..self.z.len() {
            if self.ideal_of(all & !(1 << j))?.contains(&self.z[j])? {
                found = Some(Witness {
                    condition: Condition::Minimal,
                    indices: (j + 1, j + 1, j + 1),
                    element: self.z[j].clone(),
                });
                break;
            }
        }
        self.minimal = Some(found.clone());
        Ok(found)
    }

    /// Runs the conditions of `property` for the entries taken in `perm` order.
    /// Witness indices are positions in `perm`.
    fn run(&mut self, perm: &[usize], property: Property) -> Result<Option<Witness<K>>> {
        if let Some(mut w) = self.minimal()? {
            let j = perm.iter().position(|&k| k + 1 == w.indices.0).expect("permutation") + 1;
            w.indices = (j, j, j);
            return Ok(Some(w));
        }
        let n = perm.len();
        let mut mask = 0u64;
        for i in 0..n {
            // Prefix holds positions 1..=i, i.e. perm[0..i].
            if i > 0 {
                mask |= 1 << perm[i - 1];
            }
            match property {
                Property::P => {
                    for i1 in i + 1..=n {
                        for i2 in i1..=n {
                            if let Some(g) = self.check(mask, perm[i1 - 1], perm[i2 - 1])? {
                                return Ok(Some(Witness {
                                    condition: Condition::PColon,
                                    indices: (i, i1, i2),
                                    element: g,
                                }));
                            }
                        }
                    }
                }
                Property::D => {
                    if i + 1 > n {
                        continue;
                    }
                    for j in i + 1..=n {
                        if let Some(g) = self.check(mask, perm[j - 1], perm[i])? {
                            return Ok(Some(Witness {
                                condition: Condition::DColon,
                                indices: (i, i + 1, j),
                                element: g,
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Minimal generation plus `(z_1..z_i) : z_{i1} z_{i2} = (z_1..z_i) : z_{i1}` for
/// all `0 ≤ i < i1 ≤ i2 ≤ n`. The first failure in lexicographic order of
/// `(i, i1, i2)` is reported.
pub fn is_p_sequence<K: Field>(z: &[Polynomial<K>]) -> Result<SequenceReport<K>> {
    let mut t = ColonTable::new(z)?;
    let id: Vec<usize> = (0..z.len()).collect();
    Ok(SequenceReport::from_witness(t.run(&id, Property::P)?))
}

/// Minimal generation plus `(z_1..z_i) : z_{i+1} z_j = (z_1..z_i) : z_j` for
/// all `0 ≤ i < n` and `j ≥ i + 1`.
pub fn is_d_sequence<K: Field>(z: &[Polynomial<K>]) -> Result<SequenceReport<K>> {
    let mut t = ColonTable::new(z)?;
    let id: Vec<usize> = (0..z.len()).collect();
    Ok(SequenceReport::from_witness(t.run(&id, Property::D)?))
}

/// Re-checks a witness from scratch with plain membership tests.
pub fn verify_witness<K: Field>(z: &[Polynomial<K>], w: &Witness<K>) -> Result<bool> {
    let ring = z
        .first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::Usage("empty sequence".into()))?;
    let n = z.len();
    let (i, s, e) = w.colon_positions();
    if i > n || s == 0 || s > n || e == 0 || e > n {
        return Ok(false);
    }
    match w.condition {
        Condition::Minimal => {
            let others = z.iter().enumerate().filter(|(k, _)| k + 1 != s).map(|(_, p)| p.clone());
            Ok(w.element == z[s - 1] && Ideal::new(&ring, others)?.contains(&z[s - 1])?)
        }
        Condition::PColon | Condition::DColon => {
            let prefix = Ideal::new(&ring, z[..i].iter().cloned())?;
            let once = w.element.try_mul(&z[s - 1])?;
            let twice = once.try_mul(&z[e - 1])?;
            Ok(prefix.contains(&twice)? && !prefix.contains(&once)?)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationVerdict {
    /// 1-based indices into the input, in sequence order.
    pub permutation: Vec<usize>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub property: Property,
    pub any_true: bool,
    pub exhaustive: bool,
    pub verdicts: Vec<PermutationVerdict>,
}

/// Default upper bound on the length accepted by [`permutation_scan`].
pub const DEFAULT_SCAN_CAP: usize = 8;

fn scan<K: Field>(
    z: &[Polynomial<K>],
    property: Property,
    perms: impl Iterator<Item = Vec<usize>>,
    exhaustive: bool,
) -> Result<ScanReport> {
    let mut t = ColonTable::new(z)?;
    let mut verdicts = Vec::new();
    for p in perms {
        let ok = t.run(&p, property)?.is_none();
        verdicts.push(PermutationVerdict {
            permutation: p.iter().map(|k| k + 1).collect(),
            verdict: ok,
        });
    }
    Ok(ScanReport {
        property,
        any_true: verdicts.iter().any(|v| v.verdict),
        exhaustive,
        verdicts,
    })
}

/// Verdicts for every ordering of `z`, in lexicographic order of permutations.
pub fn permutation_scan<K: Field>(z: &[Polynomial<K>], property: Property, cap: usize) -> Result<ScanReport> {
    if z.len() > cap {
        return Err(Error::ComputationLimit(format!(
            "{} entries exceed the permutation cap {cap}",
            z.len()
        )));
    }
    let n = z.len();
    scan(z, property, (0..n).permutations(n), true)
}

/// Verdicts for `count` orderings drawn uniformly (with repetition) from a seeded generator.
pub fn permutation_sample<K: Field>(z: &[Polynomial<K>], property: Property, count: usize, seed: u64) -> Result<ScanReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = z.len();
    let perms: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect();
    scan(z, property, perms.into_iter(), false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialFailure {
    /// `z_a | z_b`.
    Divides,
    /// `gcd(z_i, z_{i2}) ∤ z_{i1}`.
    GcdDivides,
    /// `gcd(z_i, z_j²) ≠ gcd(z_i, z_j)`.
    GcdSquare,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialReport {
    pub verdict: bool,
    /// The failing condition and its 1-based indices.
    pub failing: Option<(MonomialFailure, Vec<usize>)>,
}

/// Sufficient gcd criterion for a monomial sequence to be a p-sequence: no entry
/// divides another, `gcd(z_i, z_{i2}) | z_{i1}` for `i < i1 ≤ i2`, and
/// `gcd(z_i, z_j²) = gcd(z_i, z_j)` for `i < j`.
pub fn monomial_p_criterion<K: Field>(z: &[Polynomial<K>]) -> Result<MonomialReport> {
    let mut ms = Vec::with_capacity(z.len());
    for (k, p) in z.iter().enumerate() {
        match p.terms() {
            [t] if t.coeff == K::one() => ms.push(t.mono.clone()),
            _ => return Err(Error::Usage(format!("entry {} is not a monomial with coefficient 1", k + 1))),
        }
    }
    let fail = |c, idx: Vec<usize>| {
        Ok(MonomialReport {
            verdict: false,
            failing: Some((c, idx)),
        })
    };
    let n = ms.len();
    for a in 0..n {
        for b in 0..n {
            if a != b && ms[a].divides(&ms[b]) {
                return fail(MonomialFailure::Divides, vec![a + 1, b + 1]);
            }
        }
    }
    for i in 0..n {
        for i1 in i + 1..n {
            for i2 in i1..n {
                if !ms[i].gcd(&ms[i2]).divides(&ms[i1]) {
                    return fail(MonomialFailure::GcdDivides, vec![i + 1, i1 + 1, i2 + 1]);
                }
            }
        }
        for j in i + 1..n {
            if ms[i].gcd(&ms[j].pow(2)) != ms[i].gcd(&ms[j]) {
                return fail(MonomialFailure::GcdSquare, vec![i + 1, j + 1]);
            }
        }
    }
    Ok(MonomialReport {
        verdict: true,
        failing: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport<K: Field = Rational> {
    pub holds: bool,
    /// A generator of the left side lying outside the right side.
    pub witness: Option<Polynomial<K>>,
}

impl<K: Field> ContainmentReport<K> {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "witness": self.witness.as_ref().map(|p| p.to_string()),
        })
    }
}

/// Decides `(z_i) ∩ (z_1..z_{i-1})^s (z_1..ẑ_i..z_n) ⊆ z_i (z_1..z_{i-1})^{s-1} (z_1..ẑ_i..z_n)`.
pub fn eq23_containment_check<K: Field>(z: &[Polynomial<K>], i: usize, s: u32) -> Result<ContainmentReport<K>> {
    let n = z.len();
    if i == 0 || i > n {
        return Err(Error::Usage(format!("position {i} outside 1..{n}")));
    }
    if s == 0 {
        return Err(Error::Usage("exponent must be at least 1".into()));
    }
    let holds = ContainmentReport {
        holds: true,
        witness: None,
    };
    if i == 1 {
        return Ok(holds);
    }
    let ring = z[0].ring().clone();
    let zi = z[i - 1].map_into(&ring)?;
    let prefix = Ideal::new(&ring, z[..i - 1].iter().cloned())?;
    let others = Ideal::new(&ring, z.iter().enumerate().filter(|(k, _)| k + 1 != i).map(|(_, p)| p.clone()))?;
    let left = intersect(&Ideal::new(&ring, [zi.clone()])?, &product_power(&prefix, &others, s)?)?;
    let tail = product_power(&prefix, &others, s - 1)?;
    let right = Ideal::new(&ring, tail.generators().iter().map(|g| g * &zi))?;
    let gb = right.groebner_basis()?;
    for g in left.generators() {
        if !gb.contains(g)? {
            return Ok(ContainmentReport {
                holds: false,
                witness: Some(g.clone()),
            });
        }
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly_parse;
    use crate::bei::edge_binomials;
    use crate::graphs::{graph_from_edges, tree_edge_ordering, EdgeOrdering, Edge, Graph};

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vec![crate::arith::VarBlock::base("base", names.iter().copied())]).unwrap()
    }

    fn polys(r: &Arc<PolyRing>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| poly_parse(r, s).unwrap()).collect()
    }

    fn example_monomials() -> Vec<Polynomial> {
        let r = ring(&["x1", "x2", "x3", "x4", "x5", "x6"]);
        polys(&r, &["x1*x3*x4*x5", "x1^2*x2*x6", "x1^2*x2^2*x3*x5"])
    }

    fn fig1() -> Graph {
        graph_from_edges(10, [(1, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (3, 8), (5, 9), (5, 10)]).unwrap()
    }

    #[test]
    fn monomial_example_d_but_never_p() {
        let z = example_monomials();
        assert!(is_d_sequence(&z).unwrap().verdict);
        let scan = permutation_scan(&z, Property::P, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(scan.verdicts.len(), 6);
        assert!(!scan.any_true);
        for v in &scan.verdicts {
            let perm: Vec<Polynomial> = v.permutation.iter().map(|&k| z[k - 1].clone()).collect();
            let rep = is_p_sequence(&perm).unwrap();
            let w = rep.witness.expect("witness");
            assert!(verify_witness(&perm, &w).unwrap());
        }
    }

    #[test]
    fn regular_sequences() {
        let r = ring(&["x", "y", "z"]);
        let z = polys(&r, &["x", "y", "z"]);
        assert!(is_p_sequence(&z).unwrap().verdict);
        assert!(is_d_sequence(&z).unwrap().verdict);
        let scan = permutation_scan(&z, Property::D, 8).unwrap();
        assert!(scan.verdicts.iter().all(|v| v.verdict));
        for i in 1..=3 {
            assert!(eq23_containment_check(&z, i, 2).unwrap().holds);
        }
    }

    #[test]
    fn minimal_generation_and_homogeneity() {
        let r = ring(&["x", "y"]);
        let rep = is_p_sequence(&polys(&r, &["x", "x*y"])).unwrap();
        let w = rep.witness.unwrap();
        assert_eq!(w.condition, Condition::Minimal);
        assert_eq!(w.indices, (2, 2, 2));
        assert!(is_p_sequence(&polys(&r, &["x + 1", "y"])).is_err());
        assert!(permutation_scan(&polys(&r, &["x"; 9]), Property::P, 8).is_err());
    }

    #[test]
    fn tree_ordering_is_p() {
        let g = fig1();
        let o = tree_edge_ordering(&g, None).unwrap().ordering();
        let z: Vec<Polynomial> = edge_binomials(&g, Some(&o)).unwrap().into_iter().map(|b| b.polynomial).collect();
        assert!(is_p_sequence(&z).unwrap().verdict);
    }

    #[test]
    fn monomial_criterion() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        assert!(monomial_p_criterion(&polys(&r, &["x1*x2", "x3*x4"])).unwrap().verdict);
        let cat = polys(&r, &["x1*x2", "x2*x3", "x3*x4"]);
        assert!(monomial_p_criterion(&cat).unwrap().verdict);
        assert!(is_p_sequence(&cat).unwrap().verdict);
        let bad = monomial_p_criterion(&polys(&r, &["x1^2", "x1*x2"])).unwrap();
        assert_eq!(bad.failing, Some((MonomialFailure::GcdSquare, vec![1, 2])));
        assert!(monomial_p_criterion(&polys(&r, &["x1 + x2"])).is_err());
    }

    #[test]
    fn containment_fails_on_six_edge_graph() {
        let g = graph_from_edges(6, [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)]).unwrap();
        let order = EdgeOrdering::new(
            [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)].iter().map(|&(a, b)| Edge(a, b)).collect(),
        );
        let z: Vec<Polynomial> = edge_binomials(&g, Some(&order)).unwrap().into_iter().map(|b| b.polynomial).collect();
        let rep = eq23_containment_check(&z, 3, 2).unwrap();
        assert!(!rep.holds);
        assert!(eq23_containment_check(&z, 1, 3).unwrap().holds);
    }
}
