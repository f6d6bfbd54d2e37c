//! Coefficient fields.
//!
//! [`Rational`] is the authoritative field. It keeps word-size numerators and
//! denominators inline and only falls back to big integers on overflow, which
//! keeps the common ±1 coefficients of edge binomials allocation free.
//! [`Fp`] is a word-size prime field used for heavy elimination runs.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A commutative field of coefficients.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Short name used by the CLI and reports (`q`, `p32003`).
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational number; fails when the denominator vanishes in the field.
    fn from_rational(q: &Rational) -> Result<Self>;
    /// Whether the display form carries a leading minus sign.
    fn is_negative(&self) -> bool;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction, denominator positive, numerator never `i64::MIN`.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn integer(v: i64) -> Self {
        Self::from_i128(v as i128, 1)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        if num == 0 {
            return Rational(Repr::Small(0, 1));
        }
        if num > i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128 {
            Rational(Repr::Small(num as i64, den as i64))
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    /// Canonicalizes a big rational, demoting it when it fits inline.
    pub fn from_big(q: BigRational) -> Self {
        let q = if q.denom().is_negative() {
            BigRational::new(q.numer().clone(), q.denom().clone())
        } else {
            q
        };
        let q = {
            let g = q.numer().gcd(q.denom());
            if g.is_one() {
                q
            } else {
                BigRational::new_raw(q.numer() / &g, q.denom() / &g)
            }
        };
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(q))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.denom().is_one(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            Field::neg(self)
        } else {
            self.clone()
        }
    }

    fn big_op(&self, other: &Self, op: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        Self::from_big(op(&self.to_big(), &other.to_big()))
    }
}

impl Field for Rational {
    const NAME: &'static str = "q";

    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Self::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => self.big_op(other, |x, y| x + y),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => self.big_op(other, |x, y| x * y),
        }
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(a, b) => Rational(Repr::Small(-a, *b)),
            Repr::Big(q) => Self::from_big(-(**q).clone()),
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Small(a, b) => Self::from_i128(*b as i128, *a as i128),
            Repr::Big(q) => Self::from_big(q.recip()),
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational::integer(v)
    }

    fn from_rational(q: &Rational) -> Result<Self> {
        Ok(q.clone())
    }

    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(a, _) => *a < 0,
            Repr::Big(q) => q.is_negative(),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional sign and arbitrary size.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("malformed rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::parse(0, "zero denominator"));
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

/// Prime field of word-size characteristic `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

/// The prime field used by the heavy elimination mode.
pub type Fp32003 = Fp<32003>;

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> Field for Fp<P> {
    const NAME: &'static str = "p32003";

    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= P { s - P } else { s })
    }

    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + P - other.0
        })
    }

    fn mul(&self, other: &Self) -> Self {
        Fp((self.0 as u64 * other.0 as u64 % P as u64) as u32)
    }

    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P as u64 - 2)
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_rational(q: &Rational) -> Result<Self> {
        let p = BigInt::from(P);
        let reduce = |b: BigInt| -> u32 { b.mod_floor(&p).to_u32().expect("residue fits") };
        let n = reduce(q.numer());
        let d = reduce(q.denom());
        if d == 0 {
            return Err(Error::Usage(format!(
                "denominator of {q} vanishes modulo {P}"
            )));
        }
        Ok(Fp(n).mul(&Fp(d).inv()))
    }

    fn is_negative(&self) -> bool {
        self.0 > P / 2
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    /// Symmetric representative, so `-1` prints as `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_stays_reduced() {
        let a = Rational::new(2, 4);
        assert_eq!(a, Rational::new(1, 2));
        assert_eq!(a.add(&Rational::new(1, 2)), Rational::one());
        assert_eq!(Rational::new(3, -6), Rational::new(-1, 2));
        assert_eq!(Rational::new(2, 3).mul(&Rational::new(3, 2)), Rational::one());
        assert!(Rational::new(1, 3).sub(&Rational::new(1, 3)).is_zero());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::integer(i64::MAX).add(&Rational::integer(i64::MAX));
        assert!(matches!(big.0, Repr::Big(_)));
        let back = big.sub(&Rational::integer(i64::MAX));
        assert_eq!(back, Rational::integer(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let sq = big.mul(&big);
        assert_eq!(sq.div(&big), big);
    }

    #[test]
    fn parse_and_display() {
        let q: Rational = "-6/4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        let z: Rational = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(z.to_string(), "123456789012345678901234567890");
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn prime_field_basics() {
        let a = Fp32003::new(-1);
        assert_eq!(a.to_string(), "-1");
        assert_eq!(a.mul(&a), Fp32003::one());
        let x = Fp32003::new(12345);
        assert!(x.mul(&x.inv()).is_one());
        let h = Fp32003::from_rational(&Rational::new(1, 2)).unwrap();
        assert_eq!(h.add(&h), Fp32003::one());
        assert!(Fp32003::from_rational(&Rational::new(1, 32003)).is_err());
    }
}
