//! Operations on ideals built from Gröbner bases: intersection, colon,
//! saturation, elimination, products, first syzygies and graded membership.

mod graded;
mod syzygy;

use std::sync::Arc;

use crate::arith::{Field, MonomialOrder, PolyRing, Polynomial, VarBlock};
use crate::error::{Error, Result};
use crate::groebner::{divide, run_gb, GroebnerBasis, Ideal};

pub use graded::graded_membership;
pub use syzygy::{syzygies_first, Syzygy};

fn default_weights<K: Field>(ideal: &Ideal<K>) -> Vec<u32> {
    ideal
        .sugar_weights()
        .map(<[u32]>::to_vec)
        .unwrap_or_else(|| vec![1; ideal.ring().nvars()])
}

/// Result of an elimination: the ideal in the smaller ring and whether the
/// underlying basis was degree truncated.
pub struct Elimination<K: Field> {
    pub ideal: Ideal<K>,
    pub truncated: bool,
}

/// Elimination under an explicit order, which must rank every monomial involving
/// `vars` above all monomials free of them (checked on the order's leading block).
pub(crate) fn eliminate_with_order<K: Field>(
    ideal: &Ideal<K>,
    vars: &[usize],
    order: MonomialOrder,
    weights: Option<Vec<u32>>,
    max_degree: Option<u32>,
) -> Result<Elimination<K>> {
    if vars.is_empty() {
        return Err(Error::Usage("no variables to eliminate".into()));
    }
    let mut lead: Vec<usize> = order.blocks()[0].vars.clone();
    lead.sort_unstable();
    let mut want = vars.to_vec();
    want.sort_unstable();
    want.dedup();
    if lead != want {
        return Err(Error::Internal("order does not eliminate the requested variables".into()));
    }
    let ring = ideal.ring().with_order(order)?;
    let mut opts = ideal.options();
    opts.sugar_weights = Some(weights.unwrap_or_else(|| default_weights(ideal)));
    opts.max_degree = max_degree;
    let gb = run_gb(&ring, ideal.generators(), &opts)?;
    let (small, remap) = ring.without_vars(&want)?;
    let kept: Vec<Polynomial<K>> = gb
        .elements()
        .iter()
        .filter(|g| !want.iter().any(|&v| g.uses_var(v)))
        .map(|g| g.map_into(&small))
        .collect::<Result<_>>()?;
    let weights = opts.sugar_weights.as_ref().map(|w| {
        w.iter()
            .enumerate()
            .filter(|(i, _)| remap[*i].is_some())
            .map(|(_, &x)| x)
            .collect::<Vec<u32>>()
    });
    let out = Ideal::new(&small, kept.clone())?
        .with_limits(ideal.limits())
        .with_sugar_opt(weights);
    if !gb.is_truncated() {
        out.seed_gb(GroebnerBasis::from_parts(small.clone(), kept));
    }
    Ok(Elimination {
        ideal: out,
        truncated: gb.is_truncated(),
    })
}

/// `I ∩ K[vars not eliminated]`, computed under the ring order with `vars`
/// split off as a leading block. The result lives in the ring without `vars`.
pub fn eliminate<K: Field>(ideal: &Ideal<K>, vars: &[usize]) -> Result<Ideal<K>> {
    let order = ideal.ring().order().eliminating(vars);
    Ok(eliminate_with_order(ideal, vars, order, None, None)?.ideal)
}

/// Ring with one fresh auxiliary variable ranked above everything else.
fn with_aux<K: Field>(ideal: &Ideal<K>, stem: &str) -> Result<(Arc<PolyRing>, usize)> {
    let r = ideal.ring();
    let n = r.nvars();
    let name = r.fresh_name(stem);
    let block = VarBlock::base(&r.fresh_name("aux"), [name]);
    let order = r.order().with_appended(n, 1, true);
    let ext = Some(vec![vec![0]; r.gradings().len()]);
    Ok((r.with_block_appended(block, order, ext)?, n))
}

/// `I ∩ J`: eliminate `w` from `w·I + (1 − w)·J`.
pub fn intersect<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<Ideal<K>> {
    check_same(i, j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(i.ring()).with_limits(i.limits()));
    }
    let (big, w) = with_aux(i, "w")?;
    let wv = Polynomial::var_at(&big, w);
    let one_minus = &Polynomial::one(&big) - &wv;
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for g in i.generators() {
        gens.push(&wv * &g.map_into(&big)?);
    }
    for g in j.generators() {
        gens.push(&one_minus * &g.map_into(&big)?);
    }
    let mut weights = default_weights(i);
    weights.push(0);
    let aux = Ideal::new(&big, gens)?.with_limits(i.limits());
    let order = big.order().clone();
    let e = eliminate_with_order(&aux, &[w], order, Some(weights), None)?;
    relocate(&e.ideal, i)
}

/// Moves an ideal into the ring of `like`, carrying its cached basis along.
fn relocate<K: Field>(src: &Ideal<K>, like: &Ideal<K>) -> Result<Ideal<K>> {
    let ring = like.ring();
    let gens: Vec<Polynomial<K>> = src
        .generators()
        .iter()
        .map(|g| g.map_into(ring))
        .collect::<Result<_>>()?;
    let out = Ideal::new(ring, gens.clone())?
        .with_limits(like.limits())
        .with_sugar_opt(like.sugar_weights().map(<[u32]>::to_vec));
    if src.ring().order() == ring.order() {
        if let Some(gb) = src.cached_gb(src.ring().order()) {
            let els = gb
                .elements()
                .iter()
                .map(|g| g.map_into(ring))
                .collect::<Result<Vec<_>>>()?;
            out.seed_gb(GroebnerBasis::from_parts(ring.clone(), els));
        }
    }
    Ok(out)
}

fn check_same<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<()> {
    if *i.ring() != *j.ring() {
        return Err(Error::Usage("ideals live in different rings".into()));
    }
    Ok(())
}

/// Exact quotient `p / f`; a nonzero remainder is an internal error.
pub(crate) fn exact_div<K: Field>(p: &Polynomial<K>, f: &Polynomial<K>) -> Result<Polynomial<K>> {
    let (q, r) = divide(p, std::slice::from_ref(f))?;
    if !r.is_zero() {
        return Err(Error::Internal(format!("{p} is not divisible by {f}")));
    }
    Ok(q.into_iter().next().expect("one quotient"))
}

/// `I : f = (I ∩ (f)) / f`.
pub fn colon_by_poly<K: Field>(i: &Ideal<K>, f: &Polynomial<K>) -> Result<Ideal<K>> {
    if f.is_zero() {
        return Err(Error::Usage("colon by the zero polynomial".into()));
    }
    let f = f.map_into(i.ring())?;
    if f.is_constant() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring(), [f.clone()])?;
    let meet = intersect(i, &principal)?;
    let gens: Vec<Polynomial<K>> = meet
        .generators()
        .iter()
        .map(|g| exact_div(g, &f))
        .collect::<Result<_>>()?;
    Ok(Ideal::new(i.ring(), gens)?
        .with_limits(i.limits())
        .with_sugar_opt(i.sugar_weights().map(<[u32]>::to_vec)))
}

/// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
pub fn colon_by_ideal<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<Ideal<K>> {
    check_same(i, j)?;
    if j.is_zero() {
        return Err(Error::Usage("colon by the zero ideal".into()));
    }
    let mut acc: Option<Ideal<K>> = None;
    for g in j.generators() {
        let c = colon_by_poly(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.expect("nonzero ideal"))
}

/// `I : f^∞`, with the least `k` such that `I : f^k = I : f^(k+1)`.
pub fn saturate_by_poly<K: Field>(i: &Ideal<K>, f: &Polynomial<K>) -> Result<(Ideal<K>, u32)> {
    const MAX_STEPS: u32 = 64;
    let mut cur = colon_by_poly(i, f)?;
    for k in 1..=MAX_STEPS {
        let next = colon_by_poly(&cur, f)?;
        if next.equals(&cur)? {
            return Ok((cur, k));
        }
        cur = next;
    }
    Err(Error::ComputationLimit(format!(
        "saturation did not stabilize within {MAX_STEPS} steps"
    )))
}

fn dedup_gens<K: Field>(gens: Vec<Polynomial<K>>) -> Vec<Polynomial<K>> {
    let mut seen = std::collections::HashSet::new();
    gens.into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .filter(|g| seen.insert(g.clone()))
        .collect()
}

pub fn ideal_product<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<Ideal<K>> {
    check_same(i, j)?;
    let mut gens = Vec::with_capacity(i.generators().len() * j.generators().len());
    for a in i.generators() {
        for b in j.generators() {
            gens.push(a * b);
        }
    }
    Ideal::new(i.ring(), dedup_gens(gens)).map(|x| x.with_limits(i.limits()))
}

/// Largest generator count `product_power` will build.
pub const MAX_PRODUCT_GENERATORS: usize = 200_000;

pub fn ideal_power<K: Field>(i: &Ideal<K>, k: u32) -> Result<Ideal<K>> {
    let mut acc = Ideal::unit(i.ring()).with_limits(i.limits());
    for _ in 0..k {
        if acc.generators().len() * i.generators().len() > MAX_PRODUCT_GENERATORS {
            return Err(Error::ComputationLimit("power has too many generators".into()));
        }
        acc = ideal_product(&acc, i)?;
    }
    Ok(acc)
}

/// `I^k · J`. With `J = (1)` this is a plain power, with `k = 1` a plain product.
pub fn product_power<K: Field>(i: &Ideal<K>, j: &Ideal<K>, k: u32) -> Result<Ideal<K>> {
    check_same(i, j)?;
    let p = ideal_power(i, k)?;
    if p.generators().len() * j.generators().len() > MAX_PRODUCT_GENERATORS {
        return Err(Error::ComputationLimit("product has too many generators".into()));
    }
    ideal_product(&p, j)
}

#[cfg(test)]
mod tests;
