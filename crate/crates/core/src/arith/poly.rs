use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{Field, Rational};
use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term<K> {
    pub coeff: K,
    pub mono: Monomial,
}

impl<K> Term<K> {
    pub fn new(coeff: K, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Sparse polynomial, terms strictly descending under the ring's order,
/// no zero coefficients. The empty term list is zero.
#[derive(Clone)]
pub struct Polynomial<K: Field = Rational> {
    ring: Arc<PolyRing>,
    terms: Vec<Term<K>>,
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Merges two descending term lists, adding coefficients of equal monomials.
pub(crate) fn merge_terms<K: Field>(
    ring: &PolyRing,
    a: &[Term<K>],
    b: impl IntoIterator<Item = Term<K>>,
) -> Vec<Term<K>> {
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut ia = a.iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ia.next().expect("peeked").clone()),
                Ordering::Less => out.push(ib.next().expect("peeked")),
                Ordering::Equal => {
                    let x = ia.next().expect("peeked");
                    let y = ib.next().expect("peeked");
                    let c = x.coeff.add(&y.coeff);
                    if !c.is_zero() {
                        out.push(Term::new(c, y.mono));
                    }
                }
            },
            (Some(_), None) => out.extend(ia.by_ref().cloned()),
            (None, Some(_)) => out.extend(ib.by_ref()),
            (None, None) => break,
        }
    }
    out
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: K) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, K::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, c: K, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ring.nvars(), "monomial length differs from ring");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, mono)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::Usage(format!("unknown variable {name:?}")))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, K::one(), Monomial::variable(ring.nvars(), index, 1))
    }

    /// Canonicalizes an arbitrary term list (any order, duplicates, zeros allowed).
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term<K>>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = last.coeff.add(&t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusted constructor: `terms` already canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono)
            == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as `is_zero`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Homogeneous in the standard grading. Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    pub fn is_homogeneous_wrt(&self, weights: &[u32]) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.weighted_degree(weights) == w[1].mono.weighted_degree(weights))
    }

    /// Common bidegree of all terms, `None` for zero or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let first = self.ring.bidegree(&self.terms.first()?.mono);
        self.terms
            .iter()
            .all(|t| self.ring.bidegree(&t.mono) == first)
            .then_some(first)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(var) > 0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::Usage("operands live in different rings".into()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(&self.ring, &self.terms, other.terms.iter().cloned()),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(
                &self.ring,
                &self.terms,
                other.terms.iter().map(|t| Term::new(t.coeff.neg(), t.mono.clone())),
            ),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Vec<Term<K>> = Vec::new();
        for t in &small.terms {
            acc = merge_terms(&self.ring, &acc, large.mul_term_iter(&t.coeff, &t.mono));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc,
        })
    }

    fn mul_term_iter<'a>(&'a self, c: &'a K, m: &'a Monomial) -> impl Iterator<Item = Term<K>> + 'a {
        self.terms
            .iter()
            .map(move |t| Term::new(t.coeff.mul(c), t.mono.mul(m)))
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &K, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.mul_term_iter(c, m).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn neg(&self) -> Self {
        self.scale(&K::one().neg())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn map_into(&self, target: &Arc<PolyRing>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self
            .ring
            .var_names()
            .iter()
            .map(|n| target.var_index(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut m = Monomial::one(target.nvars());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| {
                    Error::Usage(format!(
                        "variable {} has no counterpart in the target ring",
                        self.ring.var_name(i)
                    ))
                })?;
                m.set_exponent(j, e);
            }
            terms.push(Term::new(t.coeff.clone(), m));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Substitutes `images[i]` for variable `i`; all images share one ring.
    pub fn substitute(&self, images: &[Polynomial<K>]) -> Result<Polynomial<K>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Usage("one image per variable required".into()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| Error::Usage("empty substitution".into()))?;
        let mut powers: Vec<Vec<Polynomial<K>>> = vec![Vec::new(); images.len()];
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut term = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().expect("nonempty").try_mul(&images[i])?;
                    cache.push(next);
                }
                term = term.try_mul(&cache[e as usize])?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Renders the polynomial; same as `Display`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> Hash for Polynomial<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    ring: &PolyRing,
    m: &Monomial,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(ring.var_name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative { t.coeff.neg() } else { t.coeff.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, &t.mono)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<K: Field> std::ops::$tr for &Polynomial<K> {
            type Output = Polynomial<K>;
            /// Panics when the operands live in different rings; use the `try_` form to handle that.
            fn $method(self, rhs: Self) -> Polynomial<K> {
                self.$inner(rhs).expect("ring mismatch")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl<K: Field> std::ops::Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(self)
    }
}

/// Right operand of [`poly_arith`].
pub enum Operand<'a, K: Field> {
    Poly(&'a Polynomial<K>),
    Scalar(K),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Scale,
}

/// Dispatching form of the ring operations, reporting ring mismatches as usage errors.
pub fn poly_arith<K: Field>(op: ArithOp, a: &Polynomial<K>, b: Operand<'_, K>) -> Result<Polynomial<K>> {
    match (op, b) {
        (ArithOp::Add, Operand::Poly(b)) => a.try_add(b),
        (ArithOp::Sub, Operand::Poly(b)) => a.try_sub(b),
        (ArithOp::Mul, Operand::Poly(b)) => a.try_mul(b),
        (ArithOp::Scale, Operand::Scalar(c)) => Ok(a.scale(&c)),
        (ArithOp::Mul, Operand::Scalar(c)) => Ok(a.scale(&c)),
        _ => Err(Error::Usage(format!("{op:?} needs a polynomial operand"))),
    }
}
