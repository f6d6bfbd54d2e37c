//! Polynomial text input.
//!
//! Accepts a signed sum of terms; a term is a `*`-separated product of factors,
//! a factor is a rational literal (`3`, `-2/5` via the sum's sign), a variable,
//! or a parenthesized expression, optionally raised to a positive integer power.
//! Whitespace is insignificant. Rendering produces a subset of this language.

use std::sync::Arc;

use super::field::{Field, Rational};
use super::poly::Polynomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
    _k: std::marker::PhantomData<K>,
}

/// Parse `text` into a canonical polynomial of `ring`.
pub fn poly_parse<K: Field>(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial<K>> {
    let mut p = Parser::<K> {
        src: text.as_bytes(),
        pos: 0,
        ring,
        _k: std::marker::PhantomData,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::parse(0, "empty input"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(out)
}

impl<K: Field> Parser<'_, K> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<K>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.try_sub(&t)? } else { acc.try_add(&t)? };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<K>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: u32 = digits
                .parse()
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| Error::parse(start, "exponent must be a positive integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial<K>> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
        };
        let c = self.src[start];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(Error::parse(self.pos, "expected ')'"));
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let mut lit = self.take_while(|c| c.is_ascii_digit());
            if self.src.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let den = self.take_while(|c| c.is_ascii_digit());
                if den.is_empty() {
                    return Err(Error::parse(self.pos, "missing denominator"));
                }
                lit = format!("{lit}/{den}");
            }
            let q: Rational = lit
                .parse()
                .map_err(|_| Error::parse(start, format!("bad number {lit:?}")))?;
            let k = K::from_rational(&q).map_err(|e| Error::parse(start, e.to_string()))?;
            return Ok(Polynomial::constant(self.ring, k));
        }
        if c.is_ascii_alphabetic() {
            let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
            return match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var_at(self.ring, i)),
                None => Err(Error::parse(start, format!("unknown variable {name:?}"))),
            };
        }
        Err(Error::parse(start, format!("unexpected {:?}", c as char)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fp32003, VarBlock};

    fn ring6() -> Arc<PolyRing> {
        PolyRing::new(vec![VarBlock::base("x", (1..=6).map(|i| format!("x_{i}")))]).unwrap()
    }

    #[test]
    fn monomial_exponents() {
        let r = ring6();
        let p: Polynomial = poly_parse(&r, "x_1^2*x_2*x_6").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].mono.exponents(), &[2, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn zero_is_empty() {
        let p: Polynomial = poly_parse(&ring6(), "0").unwrap();
        assert!(p.is_zero());
        let q: Polynomial = poly_parse(&ring6(), " x_1 - x_1 ").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring6();
        match poly_parse::<Rational>(&r, "x_1 + z_3") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(poly_parse::<Rational>(&r, "x_1^0"), Err(Error::Parse { .. })));
        assert!(matches!(poly_parse::<Rational>(&r, "x_1^"), Err(Error::Parse { .. })));
        assert!(matches!(poly_parse::<Rational>(&r, "(x_1"), Err(Error::Parse { .. })));
        assert!(matches!(poly_parse::<Rational>(&r, ""), Err(Error::Parse { .. })));
    }

    #[test]
    fn rational_coefficients_and_parentheses() {
        let r = ring6();
        let p: Polynomial = poly_parse(&r, "(x_1 + 1/2)^2 - x_1*x_1").unwrap();
        assert_eq!(p.to_string(), "x_1 + 1/4");
        let q: Polynomial<Fp32003> = poly_parse(&r, "1/2*x_2 + 1/2*x_2").unwrap();
        assert_eq!(q.to_string(), "x_2");
    }
}
