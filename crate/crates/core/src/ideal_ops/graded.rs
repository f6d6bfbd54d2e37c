use std::collections::{BTreeMap, HashMap};

use crate::arith::{Field, Monomial, PolyRing, Polynomial, Term};
use crate::error::{Error, Result};

/// Degree vector of a monomial: bidegree followed by the ring's extra gradings.
fn degree_vector(ring: &PolyRing, rows: &[&[u32]], m: &Monomial) -> Vec<u32> {
    let (a, b) = ring.bidegree(m);
    let mut v = vec![a, b];
    v.extend(rows.iter().map(|r| m.weighted_degree(r)));
    v
}

fn homogeneous_vector<K: Field>(ring: &PolyRing, rows: &[&[u32]], p: &Polynomial<K>) -> Option<Vec<u32>> {
    let mut it = p.terms().iter().map(|t| degree_vector(ring, rows, &t.mono));
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

/// All monomials whose degree vector equals `target`.
fn monomials_of_degree(weights: &[Vec<u32>], target: &[u32]) -> Vec<Monomial> {
    let n = weights.len();
    // reach[v][c]: some variable at index >= v has positive weight in component c
    let mut reach = vec![vec![false; target.len()]; n + 1];
    for v in (0..n).rev() {
        for c in 0..target.len() {
            reach[v][c] = reach[v + 1][c] || weights[v][c] > 0;
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    let mut rem = target.to_vec();
    fn rec(
        v: usize,
        weights: &[Vec<u32>],
        reach: &[Vec<bool>],
        rem: &mut Vec<u32>,
        exps: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
    ) {
        if rem.iter().all(|&r| r == 0) {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        if v == weights.len() || rem.iter().zip(&reach[v]).any(|(&r, &ok)| r > 0 && !ok) {
            return;
        }
        let w = &weights[v];
        let mut e = 0u16;
        loop {
            rec(v + 1, weights, reach, rem, exps, out);
            if w.iter().zip(rem.iter()).any(|(&wc, &rc)| wc > rc) || w.iter().all(|&x| x == 0) {
                break;
            }
            for (r, &wc) in rem.iter_mut().zip(w) {
                *r -= wc;
            }
            e += 1;
            exps[v] = e;
        }
        for (r, &wc) in rem.iter_mut().zip(w) {
            *r += wc * e as u32;
        }
        exps[v] = 0;
    }
    rec(0, weights, &reach, &mut rem, &mut exps, &mut out);
    out
}

/// Row echelon form keyed by leading monomial.
struct Echelon<K: Field> {
    rows: HashMap<Monomial, Polynomial<K>>,
}

impl<K: Field> Echelon<K> {
    fn reduce(&self, mut v: Polynomial<K>) -> Polynomial<K> {
        while let Some(t) = v.leading_term() {
            let Some(row) = self.rows.get(&t.mono) else { break };
            let c = t.coeff.clone();
            let one = Monomial::one(v.ring().nvars());
            v = &v - &row.mul_term(&c, &one);
        }
        v
    }

    fn insert(&mut self, v: Polynomial<K>) {
        let v = self.reduce(v);
        if let Some(lm) = v.leading_monomial().cloned() {
            self.rows.insert(lm, v.monic());
        }
    }
}

/// Whether `p` lies in the span of `{m·g}` over monomials `m` with
/// `bidegree(m·g) = bidegree`.
///
/// When every input is homogeneous for the ring's extra gradings the span is
/// decided one fine multidegree at a time, which keeps the systems small.
pub fn graded_membership<K: Field>(
    p: &Polynomial<K>,
    gens: &[Polynomial<K>],
    bidegree: (u32, u32),
) -> Result<bool> {
    let ring = p.ring().clone();
    if p.terms().iter().any(|t| ring.bidegree(&t.mono) != bidegree) {
        return Err(Error::Usage(format!("polynomial is not of bidegree {bidegree:?}")));
    }
    if p.is_zero() {
        return Ok(true);
    }
    let gens: Vec<Polynomial<K>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.map_into(&ring))
        .collect::<Result<_>>()?;
    if gens.iter().any(|g| homogeneous_vector(&ring, &[], g).is_none()) {
        return Err(Error::Usage("generators must be bihomogeneous".into()));
    }
    let all_rows: Vec<&[u32]> = ring.gradings().iter().map(Vec::as_slice).collect();
    let fine = gens.iter().all(|g| homogeneous_vector(&ring, &all_rows, g).is_some());
    let rows: &[&[u32]] = if fine { &all_rows } else { &[] };

    let weights: Vec<Vec<u32>> = (0..ring.nvars())
        .map(|v| degree_vector(&ring, rows, &Monomial::variable(ring.nvars(), v, 1)))
        .collect();
    let gen_deg: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| homogeneous_vector(&ring, rows, g).expect("checked"))
        .collect();

    let mut parts: BTreeMap<Vec<u32>, Vec<Term<K>>> = BTreeMap::new();
    for t in p.terms() {
        parts.entry(degree_vector(&ring, rows, &t.mono)).or_default().push(t.clone());
    }
    for (deg, terms) in parts {
        let mut ech = Echelon { rows: HashMap::new() };
        for (g, gd) in gens.iter().zip(&gen_deg) {
            if gd.iter().zip(&deg).any(|(a, b)| a > b) {
                continue;
            }
            let diff: Vec<u32> = deg.iter().zip(gd).map(|(a, b)| a - b).collect();
            for m in monomials_of_degree(&weights, &diff) {
                ech.insert(g.mul_term(&K::one(), &m));
            }
        }
        let part = Polynomial::from_terms(&ring, terms);
        if !ech.reduce(part).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
