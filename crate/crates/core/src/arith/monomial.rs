use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn variable(nvars: usize, index: usize, power: Exponent) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    pub fn set_exponent(&mut self, var: usize, e: Exponent) {
        self.exps[var] = e;
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Panics on exponent overflow; desk-scale inputs stay far below `u16::MAX`.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&a| {
                    Exponent::try_from(a as u32 * k).expect("exponent overflow")
                })
                .collect(),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a > b {
                return None;
            }
            out.push(b - a);
        }
        Some(Monomial { exps: out })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i mod 64` set when variable `i` occurs; a cheap divisibility pre-filter.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i & 63);
            }
        }
        m
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// Componentwise min and max of two exponent vectors.
pub fn monomial_gcd_lcm(u: &Monomial, v: &Monomial) -> (Monomial, Monomial) {
    (u.gcd(v), u.lcm(v))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
