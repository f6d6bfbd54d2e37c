//! Monomial orders.
//!
//! Every order is stored as a sequence of variable blocks. Two monomials are
//! compared block by block; within a block the block's own kind decides. The
//! plain lexicographic and degree reverse lexicographic orders are one-block
//! orders, and elimination orders put the eliminated block first.

use std::cmp::Ordering;

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Lex,
    DegRevLex,
    /// Degree reverse lexicographic with positive weights, one per block variable.
    WeightedDegRevLex(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub vars: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    blocks: Vec<OrderBlock>,
}

impl MonomialOrder {
    /// Lexicographic order with `x_0 > x_1 > ...`.
    pub fn lex(nvars: usize) -> Self {
        Self::single(nvars, BlockKind::Lex)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::single(nvars, BlockKind::DegRevLex)
    }

    fn single(nvars: usize, kind: BlockKind) -> Self {
        MonomialOrder {
            blocks: vec![OrderBlock {
                vars: (0..nvars).collect(),
                kind,
            }],
        }
    }

    /// Product order from blocks; the blocks must partition `0..nvars`.
    pub fn block(nvars: usize, blocks: Vec<OrderBlock>) -> Result<Self> {
        let mut seen = vec![false; nvars];
        for b in &blocks {
            if let BlockKind::WeightedDegRevLex(w) = &b.kind {
                if w.len() != b.vars.len() || w.contains(&0) {
                    return Err(Error::Config(
                        "block weights must be positive, one per variable".into(),
                    ));
                }
            }
            for &v in &b.vars {
                if v >= nvars || seen[v] {
                    return Err(Error::Config(format!(
                        "variable index {v} missing from ring or repeated across blocks"
                    )));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Config("blocks do not cover every variable".into()));
        }
        Ok(MonomialOrder {
            blocks: blocks.into_iter().filter(|b| !b.vars.is_empty()).collect(),
        })
    }

    pub fn blocks(&self) -> &[OrderBlock] {
        &self.blocks
    }

    /// Same order with `elim` split out as a leading degrevlex block.
    pub fn eliminating(&self, elim: &[usize]) -> Self {
        let mut blocks = vec![OrderBlock {
            vars: elim.to_vec(),
            kind: BlockKind::DegRevLex,
        }];
        for b in &self.blocks {
            blocks.push(b.without(|v| elim.contains(&v)));
        }
        blocks.retain(|b| !b.vars.is_empty());
        MonomialOrder { blocks }
    }

    /// Restriction to the variables kept by `remap` (old index -> new index).
    pub fn restricted(&self, remap: &[Option<usize>]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut r = b.without(|v| remap[v].is_none());
                for v in &mut r.vars {
                    *v = remap[*v].expect("kept variable");
                }
                r
            })
            .filter(|b| !b.vars.is_empty())
            .collect();
        MonomialOrder { blocks }
    }

    /// Appends `count` new variables (indices `start..start+count`) as a trailing block.
    pub fn with_appended(&self, start: usize, count: usize, first: bool) -> Self {
        let new = OrderBlock {
            vars: (start..start + count).collect(),
            kind: BlockKind::DegRevLex,
        };
        let mut blocks = self.blocks.clone();
        if first {
            blocks.insert(0, new);
        } else {
            blocks.push(new);
        }
        blocks.retain(|b| !b.vars.is_empty());
        MonomialOrder { blocks }
    }

    #[inline]
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        let (a, b) = (u.exponents(), v.exponents());
        for block in &self.blocks {
            let ord = block.cmp(a, b);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl OrderBlock {
    fn without(&self, drop: impl Fn(usize) -> bool) -> OrderBlock {
        match &self.kind {
            BlockKind::WeightedDegRevLex(w) => {
                let (vars, w): (Vec<usize>, Vec<u32>) = self
                    .vars
                    .iter()
                    .zip(w)
                    .filter(|(&v, _)| !drop(v))
                    .map(|(&v, &x)| (v, x))
                    .unzip();
                OrderBlock {
                    vars,
                    kind: BlockKind::WeightedDegRevLex(w),
                }
            }
            kind => OrderBlock {
                vars: self.vars.iter().copied().filter(|&v| !drop(v)).collect(),
                kind: kind.clone(),
            },
        }
    }

    #[inline]
    fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match &self.kind {
            BlockKind::Lex => {
                for &v in &self.vars {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            BlockKind::DegRevLex => {
                let (mut da, mut db) = (0u32, 0u32);
                for &v in &self.vars {
                    da += a[v] as u32;
                    db += b[v] as u32;
                }
                if da != db {
                    return da.cmp(&db);
                }
                revlex(&self.vars, a, b)
            }
            BlockKind::WeightedDegRevLex(w) => {
                let (mut da, mut db) = (0u32, 0u32);
                for (&v, &x) in self.vars.iter().zip(w) {
                    da += a[v] as u32 * x;
                    db += b[v] as u32 * x;
                }
                if da != db {
                    return da.cmp(&db);
                }
                revlex(&self.vars, a, b)
            }
        }
    }
}

#[inline]
fn revlex(vars: &[usize], a: &[u16], b: &[u16]) -> Ordering {
    for &v in vars.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Three-way comparison of two monomials under `order`.
pub fn monomial_cmp(order: &MonomialOrder, u: &Monomial, v: &Monomial) -> Ordering {
    order.cmp(u, v)
}
