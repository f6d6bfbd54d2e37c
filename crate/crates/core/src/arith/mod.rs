//! Exact sparse multivariate polynomial arithmetic.

mod field;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use field::{Field, Fp, Fp32003, Rational};
pub use monomial::{monomial_gcd_lcm, Exponent, Monomial};
pub use order::{monomial_cmp, BlockKind, MonomialOrder, OrderBlock};
pub use parse::poly_parse;
pub use poly::{poly_arith, ArithOp, Operand, Polynomial, Term};
pub use ring::{PolyRing, VarBlock};

pub(crate) use poly::{merge_terms, same_ring};
