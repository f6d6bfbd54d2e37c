//! Binomial edge ideals of graphs, p- and d-sequences of ideal generators, and
//! the defining ideals of Rees and symmetric algebras.

pub mod arith;
pub mod groebner;
pub mod ideal_ops;
pub mod graphs;
pub mod bei;
pub mod sequences;
pub mod rees;
pub mod repro;
pub mod cli;
pub mod error;

pub use error::{Error, Result};
