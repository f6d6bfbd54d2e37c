//! Gröbner bases, normal forms and ideals with cached bases.

pub(crate) mod engine;

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::arith::{Field, Monomial, MonomialOrder, PolyRing, Polynomial, Rational, Term};
use crate::error::{Error, Result};
pub use engine::GbLimits;
pub(crate) use engine::{GbOptions, Reducer};

/// A reduced Gröbner basis: monic, interreduced, sorted by ascending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field = Rational> {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial<K>>,
    truncated: bool,
}

impl<K: Field> GroebnerBasis<K> {
    /// Wraps elements already forming a reduced basis in `ring`.
    pub(crate) fn from_parts(ring: Arc<PolyRing>, elements: Vec<Polynomial<K>>) -> Self {
        GroebnerBasis {
            ring,
            elements,
            truncated: false,
        }
    }

    /// The ring (and so the order) the basis was computed in.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when pairs above a degree bound were skipped; the basis is then
    /// only complete up to that degree.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// Normal form of `p`; `p` is first mapped into the basis ring by variable name.
    pub fn normal_form(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        let p = p.map_into(&self.ring)?;
        Ok(divide(&p, &self.elements)?.1)
    }

    pub fn contains(&self, p: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

impl<K: Field> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.elements == other.elements
    }
}

/// Full normal form of `p` against `basis` under `order`, returned in `p`'s ring.
///
/// The remainder is canonical when `basis` is a Gröbner basis for that order.
pub fn reduce<K: Field>(p: &Polynomial<K>, basis: &[Polynomial<K>], order: &MonomialOrder) -> Result<Polynomial<K>> {
    if p.ring().order() == order {
        return Ok(divide(p, basis)?.1);
    }
    let ring = p.ring().with_order(order.clone())?;
    let basis = basis.iter().map(|b| b.map_into(&ring)).collect::<Result<Vec<_>>>()?;
    divide(&p.map_into(&ring)?, &basis)?.1.map_into(p.ring())
}

/// Multivariate division: `p = sum(q_i * basis_i) + r` with no term of `r`
/// divisible by a leading monomial of `basis`.
pub fn divide<K: Field>(
    p: &Polynomial<K>,
    basis: &[Polynomial<K>],
) -> Result<(Vec<Polynomial<K>>, Polynomial<K>)> {
    let ring = p.ring().clone();
    for b in basis {
        if !crate::arith::same_ring(b.ring(), &ring) {
            return Err(Error::Usage("divisor lives in a different ring".into()));
        }
    }
    let live: Vec<usize> = (0..basis.len()).filter(|&i| !basis[i].is_zero()).collect();
    let reducers: Vec<Reducer<K>> = live.iter().map(|&i| Reducer::new(basis[i].terms())).collect();
    let mut quot: Vec<Vec<Term<K>>> = vec![Vec::new(); basis.len()];
    let r = engine::reduce_terms(
        ring.order(),
        p.terms().to_vec(),
        &reducers,
        true,
        GbLimits::default().max_terms,
        |k, c, q| quot[live[k]].push(Term::new(c.clone(), q.clone())),
    )?;
    let quot = quot
        .into_iter()
        .map(|t| Polynomial::from_terms(&ring, t))
        .collect();
    Ok((quot, Polynomial::from_sorted(&ring, r)))
}

pub(crate) fn polys_to_terms<K: Field>(ring: &Arc<PolyRing>, gens: &[Polynomial<K>]) -> Result<Vec<Vec<Term<K>>>> {
    gens.iter().map(|g| Ok(g.map_into(ring)?.into_terms())).collect()
}

pub(crate) fn run_gb<K: Field>(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial<K>],
    opts: &GbOptions,
) -> Result<GroebnerBasis<K>> {
    let terms = polys_to_terms(ring, gens)?;
    let out = engine::groebner(ring, &terms, opts)?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: out
            .basis
            .into_iter()
            .map(|t| Polynomial::from_sorted(ring, t))
            .collect(),
        truncated: out.truncated,
    })
}

/// Tracked run: every basis element with its cofactors, `g_k = sum_i C[k][i] * gens[i]`.
pub(crate) fn run_tracked<K: Field>(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial<K>],
    limits: GbLimits,
) -> Result<(Vec<Polynomial<K>>, Vec<Vec<Polynomial<K>>>)> {
    let terms = polys_to_terms(ring, gens)?;
    let opts = GbOptions {
        limits,
        track: true,
        ..Default::default()
    };
    let out = engine::groebner(ring, &terms, &opts)?;
    let basis = out.basis.into_iter().map(|t| Polynomial::from_sorted(ring, t)).collect();
    let cofs = out
        .cofactors
        .into_iter()
        .map(|row| row.into_iter().map(|t| Polynomial::from_sorted(ring, t)).collect())
        .collect();
    Ok((basis, cofs))
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger_reduced_gb<K: Field>(ideal: &Ideal<K>, order: &MonomialOrder) -> Result<Arc<GroebnerBasis<K>>> {
    ideal.groebner_basis_in(order)
}

/// An ideal given by nonzero generators, caching one Gröbner basis per order.
#[derive(Debug)]
pub struct Ideal<K: Field = Rational> {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial<K>>,
    limits: GbLimits,
    sugar_weights: Option<Vec<u32>>,
    gb_cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis<K>>>>,
}

impl<K: Field> Clone for Ideal<K> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            limits: self.limits,
            sugar_weights: self.sugar_weights.clone(),
            gb_cache: RwLock::new(self.gb_cache.read().clone()),
        }
    }
}

impl<K: Field> Ideal<K> {
    /// Zero generators are dropped; others are mapped into `ring` by name.
    pub fn new(ring: &Arc<PolyRing>, generators: impl IntoIterator<Item = Polynomial<K>>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            gens.push(g.map_into(ring)?);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            limits: GbLimits::default(),
            sugar_weights: None,
            gb_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, []).expect("empty")
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    pub fn with_limits(mut self, limits: GbLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> GbLimits {
        self.limits
    }

    /// Degree weights used by pair selection (zero allowed). Affects speed only.
    pub fn with_sugar_weights(mut self, weights: Vec<u32>) -> Self {
        self.sugar_weights = Some(weights);
        self
    }

    pub(crate) fn sugar_weights(&self) -> Option<&[u32]> {
        self.sugar_weights.as_deref()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub(crate) fn options(&self) -> GbOptions {
        GbOptions {
            limits: self.limits,
            sugar_weights: self.sugar_weights.clone(),
            ..Default::default()
        }
    }

    /// Gröbner basis under the ring's own order.
    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis<K>>> {
        self.groebner_basis_in(&self.ring.order().clone())
    }

    pub fn groebner_basis_in(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis<K>>> {
        if let Some(gb) = self.gb_cache.read().get(order) {
            return Ok(gb.clone());
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order.clone())?
        };
        let gb = Arc::new(run_gb(&ring, &self.generators, &self.options())?);
        self.gb_cache.write().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub(crate) fn cached_gb(&self, order: &MonomialOrder) -> Option<Arc<GroebnerBasis<K>>> {
        self.gb_cache.read().get(order).cloned()
    }

    /// Stores a basis known to generate this ideal. The caller vouches for it.
    pub(crate) fn seed_gb(&self, gb: GroebnerBasis<K>) {
        self.gb_cache.write().insert(gb.order().clone(), Arc::new(gb));
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn contains(&self, p: &Polynomial<K>) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        self.groebner_basis()?.contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal<K>) -> Result<bool> {
        let gb = self.groebner_basis()?;
        for g in other.generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by reduced bases under the ring order.
    pub fn equals(&self, other: &Ideal<K>) -> Result<bool> {
        if *self.ring != *other.ring {
            return Err(Error::Usage("ideals live in different rings".into()));
        }
        let a = self.groebner_basis()?;
        let b = other.groebner_basis()?;
        Ok(a.elements() == b.elements())
    }

    /// Normal form against the basis under the ring order.
    pub fn normal_form(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        self.groebner_basis()?.normal_form(p)
    }

    /// The ideal generated by these generators plus `more`.
    pub fn extended(&self, more: impl IntoIterator<Item = Polynomial<K>>) -> Result<Ideal<K>> {
        let gens = self.generators.iter().cloned().chain(more);
        Ok(Ideal::new(&self.ring, gens)?
            .with_limits(self.limits)
            .with_sugar_opt(self.sugar_weights.clone()))
    }

    pub(crate) fn with_sugar_opt(mut self, w: Option<Vec<u32>>) -> Self {
        self.sugar_weights = w;
        self
    }
}

pub fn ideal_member<K: Field>(p: &Polynomial<K>, ideal: &Ideal<K>) -> Result<bool> {
    ideal.contains(p)
}

pub fn ideal_equal<K: Field>(a: &Ideal<K>, b: &Ideal<K>) -> Result<bool> {
    a.equals(b)
}

#[cfg(test)]
mod tests;
