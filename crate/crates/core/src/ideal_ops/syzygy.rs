use std::collections::HashSet;

use crate::arith::{Field, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::groebner::{divide, run_tracked, GbLimits};

/// A relation `sum(coefficients[i] * f_i) = 0` among generators `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syzygy<K: Field = Rational> {
    pub coefficients: Vec<Polynomial<K>>,
}

impl<K: Field> Syzygy<K> {
    pub fn evaluate(&self, gens: &[Polynomial<K>]) -> Result<Polynomial<K>> {
        if gens.len() != self.coefficients.len() {
            return Err(Error::Usage("syzygy length differs from generator count".into()));
        }
        let ring = gens
            .first()
            .map(|g| g.ring().clone())
            .ok_or_else(|| Error::Usage("no generators".into()))?;
        let mut acc = Polynomial::zero(&ring);
        for (c, g) in self.coefficients.iter().zip(gens) {
            acc = acc.try_add(&c.try_mul(g)?)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }
}

/// Generators of the first syzygy module of `f`.
///
/// Every S-pair relation among a tracked Gröbner basis is lifted back to `f`
/// through the cofactor matrix, and each `f_i` contributes the relation
/// expressing it through the basis. The set generates but is not minimal.
pub fn syzygies_first<K: Field>(f: &[Polynomial<K>]) -> Result<Vec<Syzygy<K>>> {
    let Some(first) = f.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if f.iter().any(Polynomial::is_zero) {
        return Err(Error::Usage("syzygies of a zero generator".into()));
    }
    let m = f.len();
    let (basis, cofs) = run_tracked(&ring, f, GbLimits::default())?;
    let zero = Polynomial::zero(&ring);

    // Lift a combination over the basis, given sparsely, to one over f.
    let lift = |combo: &[(usize, Polynomial<K>)]| -> Vec<Polynomial<K>> {
        let mut out = vec![zero.clone(); m];
        for (j, c) in combo {
            for (slot, cf) in out.iter_mut().zip(&cofs[*j]) {
                if !cf.is_zero() {
                    *slot = &*slot + &(c * cf);
                }
            }
        }
        out
    };

    let mut found: Vec<Syzygy<K>> = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |coefficients: Vec<Polynomial<K>>| {
        let s = Syzygy { coefficients };
        if !s.is_zero() && seen.insert(s.clone()) {
            found.push(s);
        }
    };

    for (i, fi) in f.iter().enumerate() {
        let (q, r) = divide(fi, &basis)?;
        if !r.is_zero() {
            return Err(Error::Internal("generator does not reduce to zero".into()));
        }
        let combo: Vec<(usize, Polynomial<K>)> = q.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut v = lift(&combo);
        v[i] = &v[i] - &Polynomial::one(&ring);
        push(v);
    }

    for k in 0..basis.len() {
        for l in k + 1..basis.len() {
            let (a, b) = (&basis[k], &basis[l]);
            let (la, lb) = (a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"));
            let lcm = la.lcm(lb);
            let qa = la.quotient_of(&lcm).expect("lcm");
            let qb = lb.quotient_of(&lcm).expect("lcm");
            let one = K::one();
            let s = &a.mul_term(&one, &qa) - &b.mul_term(&one, &qb);
            let (h, r) = divide(&s, &basis)?;
            if !r.is_zero() {
                return Err(Error::Internal("S-polynomial of a basis does not reduce to zero".into()));
            }
            let mut combo: Vec<(usize, Polynomial<K>)> =
                h.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, -&c)).collect();
            combo.push((k, Polynomial::monomial(&ring, one.clone(), qa)));
            combo.push((l, Polynomial::monomial(&ring, one.neg(), qb)));
            push(lift(&combo));
        }
    }

    for s in &found {
        if !s.evaluate(f)?.is_zero() {
            return Err(Error::Internal("lifted syzygy does not vanish".into()));
        }
    }
    Ok(found)
}
