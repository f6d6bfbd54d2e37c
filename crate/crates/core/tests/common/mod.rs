//! Independent oracles shared by the integration tests.
//!
//! `Graded` decides membership in a multigraded ideal by dense linear algebra
//! over F_32003 on one homogeneous component at a time, with no Gröbner bases.
//! `mono` implements colon ideals of monomial ideals combinatorially.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use bei::arith::{Fp32003, Polynomial, Rational};
use num_traits::ToPrimitive;

pub const P: u64 = 32003;

pub trait ModP {
    fn mod_p(&self) -> u64;
}

impl ModP for Rational {
    fn mod_p(&self) -> u64 {
        let p = num_bigint::BigInt::from(P);
        let n = ((self.numer() % &p) + &p) % &p;
        let d = ((self.denom() % &p) + &p) % &p;
        let (n, d) = (n.to_u64().unwrap(), d.to_u64().unwrap());
        assert!(d != 0, "denominator divisible by p");
        n * inv(d) % P
    }
}

impl ModP for Fp32003 {
    fn mod_p(&self) -> u64 {
        u64::from(self.value())
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    assert!(!a.is_multiple_of(P));
    pow(a, P - 2)
}

/// Exponent vector to coefficient mod p.
pub type Sparse = BTreeMap<Vec<u32>, u64>;

pub fn sparse<K: ModP + bei::arith::Field>(p: &Polynomial<K>) -> Sparse {
    let mut out = Sparse::new();
    for t in p.terms() {
        let c = t.coeff.mod_p();
        if c != 0 {
            out.insert(t.mono.exponents().iter().map(|&e| u32::from(e)).collect(), c);
        }
    }
    out
}

pub fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(m).or_insert(0);
            *e = (*e + ca * cb) % P;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn add(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(m.clone()).or_insert(0);
        *e = (*e + c) % P;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Substitutes `images[v]` for variable `v`.
pub fn substitute(p: &Sparse, images: &[Sparse], nvars_out: usize) -> Sparse {
    let mut out = Sparse::new();
    for (m, c) in p {
        let mut term: Sparse = [(vec![0; nvars_out], *c)].into_iter().collect();
        for (v, &e) in m.iter().enumerate() {
            for _ in 0..e {
                term = mul(&term, &images[v]);
            }
        }
        out = add(&out, &term);
    }
    out
}

fn degree(m: &[u32], rows: &[Vec<u32>]) -> Vec<u32> {
    rows.iter().map(|r| r.iter().zip(m).map(|(w, e)| w * e).sum()).collect()
}

/// All exponent vectors of multidegree exactly `target`.
pub fn monomials_of(rows: &[Vec<u32>], nvars: usize, target: &[u32]) -> Vec<Vec<u32>> {
    for v in 0..nvars {
        assert!(rows.iter().any(|r| r[v] > 0), "variable {v} has weight zero in every row");
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    let mut acc = vec![0u32; rows.len()];
    fn go(v: usize, rows: &[Vec<u32>], target: &[u32], cur: &mut Vec<u32>, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == cur.len() {
            if acc == target {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        loop {
            if acc.iter().zip(target).any(|(a, t)| a > t) {
                break;
            }
            cur[v] = e;
            go(v + 1, rows, target, cur, acc, out);
            e += 1;
            for (k, r) in rows.iter().enumerate() {
                acc[k] += r[v];
            }
        }
        for (k, r) in rows.iter().enumerate() {
            acc[k] -= r[v] * e;
        }
        cur[v] = 0;
    }
    go(0, rows, target, &mut cur, &mut acc, &mut out);
    out
}

/// Row echelon form over F_p keyed by pivot column.
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, BTreeMap<usize, u64>>,
}

impl Echelon {
    fn reduce(&self, mut v: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
        let mut from = 0;
        loop {
            let next = v.range(from..).find(|(c, _)| self.rows.contains_key(c)).map(|(&c, &x)| (c, x));
            let Some((c, x)) = next else { return v };
            for (&k, &y) in &self.rows[&c] {
                let e = v.entry(k).or_insert(0);
                *e = (*e + P - x * y % P) % P;
                if *e == 0 {
                    v.remove(&k);
                }
            }
            from = c + 1;
        }
    }

    /// Adds `v`; returns whether the rank grew.
    fn insert(&mut self, v: BTreeMap<usize, u64>) -> bool {
        let v = self.reduce(v);
        let Some((&c, &x)) = v.iter().next() else { return false };
        let s = inv(x);
        let row = v.into_iter().map(|(k, y)| (k, y * s % P)).collect();
        self.rows.insert(c, row);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A homogeneous ideal for a family of gradings.
pub struct Graded {
    nvars: usize,
    rows: Vec<Vec<u32>>,
    gens: Vec<(Sparse, Vec<u32>)>,
}

impl Graded {
    pub fn new(nvars: usize, rows: Vec<Vec<u32>>, gens: impl IntoIterator<Item = Sparse>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| {
                let d = Self::multidegree_of(&rows, &g);
                (g, d)
            })
            .collect();
        Graded { nvars, rows, gens }
    }

    pub fn from_polys<K: ModP + bei::arith::Field>(rows: Vec<Vec<u32>>, gens: &[Polynomial<K>]) -> Self {
        let nvars = gens.first().map(|g| g.ring().nvars()).expect("at least one generator");
        Self::new(nvars, rows, gens.iter().map(sparse))
    }

    fn multidegree_of(rows: &[Vec<u32>], p: &Sparse) -> Vec<u32> {
        let mut it = p.keys().map(|m| degree(m, rows));
        let d = it.next().expect("nonzero");
        assert!(it.all(|e| e == d), "polynomial is not homogeneous for the given rows");
        d
    }

    pub fn multidegree(&self, p: &Sparse) -> Vec<u32> {
        Self::multidegree_of(&self.rows, p)
    }

    fn component(&self, target: &[u32]) -> (HashMap<Vec<u32>, usize>, Echelon) {
        let mut cols: HashMap<Vec<u32>, usize> = HashMap::new();
        for m in monomials_of(&self.rows, self.nvars, target) {
            let k = cols.len();
            cols.insert(m, k);
        }
        let mut ech = Echelon::default();
        for (g, d) in &self.gens {
            if d.iter().zip(target).any(|(a, t)| a > t) {
                continue;
            }
            let rest: Vec<u32> = target.iter().zip(d).map(|(t, a)| t - a).collect();
            for m in monomials_of(&self.rows, self.nvars, &rest) {
                let mut v = BTreeMap::new();
                for (gm, c) in g {
                    let key: Vec<u32> = gm.iter().zip(&m).map(|(a, b)| a + b).collect();
                    v.insert(cols[&key], *c);
                }
                ech.insert(v);
            }
        }
        (cols, ech)
    }

    fn column_vector(cols: &HashMap<Vec<u32>, usize>, p: &Sparse) -> BTreeMap<usize, u64> {
        p.iter().map(|(m, c)| (cols[m], *c)).collect()
    }

    pub fn contains(&self, p: &Sparse) -> bool {
        if p.is_empty() {
            return true;
        }
        let (cols, ech) = self.component(&self.multidegree(p));
        ech.reduce(Self::column_vector(&cols, p)).is_empty()
    }

    pub fn contains_poly<K: ModP + bei::arith::Field>(&self, p: &Polynomial<K>) -> bool {
        self.contains(&sparse(p))
    }

    /// Dimension of the component of multidegree `target`.
    pub fn dim(&self, target: &[u32]) -> usize {
        self.component(target).1.rank()
    }

    /// Dimension of `(I : f)` in multidegree `target`.
    pub fn colon_dim(&self, f: &Sparse, target: &[u32]) -> usize {
        let df = self.multidegree(f);
        let up: Vec<u32> = target.iter().zip(&df).map(|(a, b)| a + b).collect();
        let (cols, ech) = self.component(&up);
        let basis = monomials_of(&self.rows, self.nvars, target);
        let mut image = Echelon::default();
        for m in &basis {
            let mono: Sparse = [(m.clone(), 1)].into_iter().collect();
            let v = ech.reduce(Self::column_vector(&cols, &mul(&mono, f)));
            image.insert(v);
        }
        basis.len() - image.rank()
    }
}

/// Evaluates `X_k ↦ f_k` with the sparse oracle arithmetic.
pub fn evaluates_to_zero<K: ModP + bei::arith::Field>(setup: &bei::rees::ReesSetup<K>, p: &Polynomial<K>) -> bool {
    let ring = setup.ring();
    let base = setup.base_ring();
    let nb = base.nvars();
    let mut images: Vec<Sparse> = vec![Sparse::new(); ring.nvars()];
    for (v, name) in ring.var_names().iter().enumerate() {
        if let Some(b) = base.var_index(name) {
            let mut m = vec![0; nb];
            m[b] = 1;
            images[v] = [(m, 1)].into_iter().collect();
        }
    }
    for (k, f) in setup.generators().iter().enumerate() {
        let x = setup.fiber_var(k);
        let v = x.leading_monomial().unwrap().support().next().unwrap();
        images[v] = sparse(f);
    }
    substitute(&sparse(p), &images, nb).is_empty()
}

/// Monomial ideals as lists of exponent vectors.
pub mod mono {
    pub type M = Vec<u32>;

    pub fn divides(a: &M, b: &M) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn times(a: &M, b: &M) -> M {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn minimalize(mut g: Vec<M>) -> Vec<M> {
        g.sort();
        g.dedup();
        let all = g.clone();
        g.retain(|m| !all.iter().any(|o| o != m && divides(o, m)));
        g
    }

    /// `(gens) : u`.
    pub fn colon(gens: &[M], u: &M) -> Vec<M> {
        minimalize(gens.iter().map(|g| g.iter().zip(u).map(|(x, y)| x.saturating_sub(*y)).collect()).collect())
    }

    pub fn member(gens: &[M], m: &M) -> bool {
        gens.iter().any(|g| divides(g, m))
    }

    pub fn subset(a: &[M], b: &[M]) -> bool {
        a.iter().all(|m| member(b, m))
    }

    fn minimal_generation(ms: &[M]) -> bool {
        (0..ms.len()).all(|j| (0..ms.len()).all(|k| k == j || !divides(&ms[k], &ms[j])))
    }

    /// Straight from the definition; prefix `i = 0` is the zero ideal.
    pub fn is_p_sequence(ms: &[M]) -> bool {
        if !minimal_generation(ms) {
            return false;
        }
        let n = ms.len();
        for i in 1..n {
            let prefix = &ms[..i];
            for i1 in i..n {
                for i2 in i1..n {
                    let a = colon(prefix, &ms[i1]);
                    let b = colon(prefix, &times(&ms[i1], &ms[i2]));
                    if !subset(&b, &a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_d_sequence(ms: &[M]) -> bool {
        if !minimal_generation(ms) {
            return false;
        }
        let n = ms.len();
        for i in 1..n {
            let prefix = &ms[..i];
            for j in i..n {
                let a = colon(prefix, &ms[j]);
                let b = colon(prefix, &times(&ms[i], &ms[j]));
                if !subset(&b, &a) {
                    return false;
                }
            }
        }
        true
    }
}
