//! Binomial edge ideals `J_G = (x_i y_j − x_j y_i : {i,j} ∈ E(G))` and the
//! closed-form colon ideals `J_G : f_e`.

use std::sync::Arc;

use crate::arith::{Field, Monomial, PolyRing, Polynomial, Rational, VarBlock};
use crate::error::{Error, Result};
use crate::graphs::{neighbor_completion, Edge, EdgeOrdering, Graph};
use crate::groebner::Ideal;

/// Block name of the base variables.
pub const BASE_BLOCK: &str = "base";

/// `K[x_1..x_n, y_1..y_n]` under degrevlex with `x_1 > … > x_n > y_1 > … > y_n`.
///
/// The ring carries fine gradings besides the standard one: a row per vertex
/// `v` (weight 1 on `x_v` and `y_v`), then an `x`-row and a `y`-row. Every
/// edge binomial is homogeneous for all of them.
pub fn bei_ring(n: usize) -> Arc<PolyRing> {
    let names = (1..=n).map(|i| format!("x_{i}")).chain((1..=n).map(|i| format!("y_{i}")));
    let ring = PolyRing::new(vec![VarBlock::base(BASE_BLOCK, names)]).expect("valid names");
    ring.with_gradings(bei_gradings(n)).expect("row lengths")
}

fn bei_gradings(n: usize) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = (1..=n)
        .map(|v| (0..2 * n).map(|k| u32::from(k % n + 1 == v)).collect())
        .collect();
    rows.push((0..2 * n).map(|k| u32::from(k < n)).collect());
    rows.push((0..2 * n).map(|k| u32::from(k >= n)).collect());
    rows
}

pub fn x_var(ring: &PolyRing, i: usize) -> Result<usize> {
    ring.var_index(&format!("x_{i}"))
        .ok_or_else(|| Error::Usage(format!("ring has no x_{i}")))
}

pub fn y_var(ring: &PolyRing, i: usize) -> Result<usize> {
    ring.var_index(&format!("y_{i}"))
        .ok_or_else(|| Error::Usage(format!("ring has no y_{i}")))
}

/// An edge with its binomial `f_ij = x_i y_j − x_j y_i`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBinomial<K: Field = Rational> {
    pub edge: Edge,
    pub polynomial: Polynomial<K>,
}

/// `f_ij` in `ring`, which must contain `x_i, x_j, y_i, y_j`.
pub fn edge_binomial<K: Field>(ring: &Arc<PolyRing>, e: Edge) -> Result<Polynomial<K>> {
    let n = ring.nvars();
    let (xi, xj, yi, yj) = (x_var(ring, e.0)?, x_var(ring, e.1)?, y_var(ring, e.0)?, y_var(ring, e.1)?);
    let mono = |a: usize, b: usize| {
        let mut m = Monomial::one(n);
        m.set_exponent(a, 1);
        m.set_exponent(b, 1);
        m
    };
    let plus = Polynomial::monomial(ring, K::one(), mono(xi, yj));
    let minus = Polynomial::monomial(ring, K::one().neg(), mono(xj, yi));
    plus.try_add(&minus)
}

/// Edge binomials of `g`, in `ordering` when given, else in ascending edge order.
pub fn edge_binomials<K: Field>(g: &Graph, ordering: Option<&EdgeOrdering>) -> Result<Vec<EdgeBinomial<K>>> {
    let ring = bei_ring(g.n());
    let edges = match ordering {
        Some(o) => {
            if !o.is_permutation_of(g) {
                return Err(Error::Usage("ordering is not a permutation of the edge set".into()));
            }
            o.edges.clone()
        }
        None => g.edge_vec(),
    };
    edges
        .into_iter()
        .map(|e| {
            Ok(EdgeBinomial {
                edge: e,
                polynomial: edge_binomial(&ring, e)?,
            })
        })
        .collect()
}

/// `J_G` in [`bei_ring`]`(n)`, generators following `ordering` when given.
pub fn binomial_edge_ideal<K: Field>(g: &Graph, ordering: Option<&EdgeOrdering>) -> Result<Ideal<K>> {
    let ring = bei_ring(g.n());
    let gens = edge_binomials::<K>(g, ordering)?.into_iter().map(|b| b.polynomial);
    Ideal::new(&ring, gens)
}

/// `J_G : f_e = J_{G_e}` when `e` is a bridge of `G ∪ {e}`, built without any Gröbner computation.
pub fn colon_bridge_formula<K: Field>(g: &Graph, e: Edge) -> Result<Ideal<K>> {
    if g.contains_edge(e) {
        return Err(Error::Usage(format!("{e} is already an edge")));
    }
    if e.1 > g.n() {
        return Err(Error::Input(format!("{e} outside vertices 1..{}", g.n())));
    }
    if !g.simple_paths(e.0, e.1, None).is_empty() {
        return Err(Error::Usage(format!(
            "{e} is not a bridge of G ∪ {e}; use the path formula"
        )));
    }
    binomial_edge_ideal(&neighbor_completion(g, e)?, None)
}

/// `J_G : f_e = J_{G_e} + (g_{P,t})` over all paths `P: i, i_1, …, i_s, j` in `G`,
/// with `g_{P,t} = y_{i_1}⋯y_{i_t} x_{i_{t+1}}⋯x_{i_s}` for `0 ≤ t ≤ s`.
///
/// `max_inner` caps the path length searched; `None` searches all simple paths.
pub fn colon_path_formula<K: Field>(g: &Graph, e: Edge, max_inner: Option<usize>) -> Result<Ideal<K>> {
    if g.contains_edge(e) {
        return Err(Error::Usage(format!("{e} is already an edge")));
    }
    if e.1 > g.n() {
        return Err(Error::Input(format!("{e} outside vertices 1..{}", g.n())));
    }
    let base = binomial_edge_ideal::<K>(&neighbor_completion(g, e)?, None)?;
    let ring = base.ring().clone();
    let mut extra = Vec::new();
    for p in g.simple_paths(e.0, e.1, max_inner) {
        let inner = &p[1..p.len() - 1];
        for t in 0..=inner.len() {
            let mut m = Monomial::one(ring.nvars());
            for (k, &v) in inner.iter().enumerate() {
                let var = if k < t { y_var(&ring, v)? } else { x_var(&ring, v)? };
                m.set_exponent(var, 1);
            }
            extra.push(Polynomial::monomial(&ring, K::one(), m));
        }
    }
    base.extended(extra)
}
