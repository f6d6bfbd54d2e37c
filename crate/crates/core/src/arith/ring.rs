use std::collections::HashMap;
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// A named group of variables. Fiber blocks carry bidegree (0,1), all others (1,0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarBlock {
    pub name: String,
    pub vars: Vec<String>,
    pub fiber: bool,
}

impl VarBlock {
    pub fn base(name: &str, vars: impl IntoIterator<Item = impl Into<String>>) -> Self {
        VarBlock {
            name: name.to_string(),
            vars: vars.into_iter().map(Into::into).collect(),
            fiber: false,
        }
    }

    pub fn fiber(name: &str, vars: impl IntoIterator<Item = impl Into<String>>) -> Self {
        VarBlock {
            fiber: true,
            ..Self::base(name, vars)
        }
    }
}

#[derive(Debug, Clone)]
struct BlockInfo {
    name: String,
    start: usize,
    len: usize,
    fiber: bool,
}

/// Polynomial ring over a field (the field is a type parameter of the polynomials).
///
/// The ring owns its monomial order: polynomials are always stored sorted by it,
/// and a computation under another order runs in a sibling ring obtained with
/// [`PolyRing::with_order`].
#[derive(Debug, Clone)]
pub struct PolyRing {
    var_names: Vec<String>,
    blocks: Vec<BlockInfo>,
    bigrading: Vec<(u32, u32)>,
    /// Extra nonnegative gradings, one row per grading, one entry per variable.
    gradings: Vec<Vec<u32>>,
    order: MonomialOrder,
    index: HashMap<String, usize>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.var_names == other.var_names && self.order == other.order
    }
}

impl Eq for PolyRing {}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Ring with the given blocks in declaration order, degrevlex by default.
    pub fn new(blocks: Vec<VarBlock>) -> Result<Arc<PolyRing>> {
        let nvars = blocks.iter().map(|b| b.vars.len()).sum();
        Self::with_blocks(blocks, MonomialOrder::degrevlex(nvars))
    }

    pub fn with_blocks(blocks: Vec<VarBlock>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let mut var_names = Vec::new();
        let mut infos = Vec::new();
        let mut bigrading = Vec::new();
        let mut index = HashMap::new();
        let mut block_names = Vec::<String>::new();
        for b in blocks {
            if b.name.is_empty() || block_names.contains(&b.name) {
                return Err(Error::Config(format!("bad or duplicate block name {:?}", b.name)));
            }
            block_names.push(b.name.clone());
            infos.push(BlockInfo {
                name: b.name.clone(),
                start: var_names.len(),
                len: b.vars.len(),
                fiber: b.fiber,
            });
            for v in b.vars {
                if !valid_name(&v) {
                    return Err(Error::Config(format!("invalid variable name {v:?}")));
                }
                if index.insert(v.clone(), var_names.len()).is_some() {
                    return Err(Error::Config(format!("duplicate variable name {v:?}")));
                }
                var_names.push(v);
                bigrading.push(if b.fiber { (0, 1) } else { (1, 0) });
            }
        }
        let n = var_names.len();
        if order.blocks().iter().map(|b| b.vars.len()).sum::<usize>() != n
            || order.blocks().iter().flat_map(|b| &b.vars).any(|&v| v >= n)
        {
            return Err(Error::Config("order does not match ring variables".into()));
        }
        Ok(Arc::new(PolyRing {
            var_names,
            blocks: infos,
            bigrading,
            gradings: Vec::new(),
            order,
            index,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.var_names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn bidegree_of_var(&self, i: usize) -> (u32, u32) {
        self.bigrading[i]
    }

    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        m.exponents()
            .iter()
            .zip(&self.bigrading)
            .fold((0, 0), |(a, b), (&e, &(x, y))| (a + e as u32 * x, b + e as u32 * y))
    }

    pub fn is_fiber_var(&self, i: usize) -> bool {
        self.bigrading[i].1 == 1
    }

    pub fn fiber_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.is_fiber_var(i)).collect()
    }

    /// Variables of the named block.
    pub fn block_vars(&self, name: &str) -> Option<std::ops::Range<usize>> {
        self.blocks
            .iter()
            .find(|b| b.name == name)
            .map(|b| b.start..b.start + b.len)
    }

    pub fn block_names(&self) -> Vec<&str> {
        self.blocks.iter().map(|b| b.name.as_str()).collect()
    }

    pub fn gradings(&self) -> &[Vec<u32>] {
        &self.gradings
    }

    /// Declared blocks, reconstructed.
    pub fn var_blocks(&self) -> Vec<VarBlock> {
        self.blocks
            .iter()
            .map(|b| VarBlock {
                name: b.name.clone(),
                vars: self.var_names[b.start..b.start + b.len].to_vec(),
                fiber: b.fiber,
            })
            .collect()
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let mut r = Self::with_blocks(self.var_blocks(), order)?;
        Arc::make_mut(&mut r).gradings = self.gradings.clone();
        Ok(r)
    }

    /// Attaches extra gradings (rows of nonnegative weights, one per variable).
    pub fn with_gradings(&self, rows: Vec<Vec<u32>>) -> Result<Arc<PolyRing>> {
        if rows.iter().any(|r| r.len() != self.nvars()) {
            return Err(Error::Config("grading row length differs from variable count".into()));
        }
        let mut r = self.clone();
        r.gradings = rows;
        Ok(Arc::new(r))
    }

    /// Appends a block of fresh variables. `order` must cover the enlarged ring;
    /// extra gradings are extended with the supplied per-variable weights.
    pub fn with_block_appended(
        &self,
        block: VarBlock,
        order: MonomialOrder,
        grading_weights: Option<Vec<Vec<u32>>>,
    ) -> Result<Arc<PolyRing>> {
        let added = block.vars.len();
        let mut blocks = self.var_blocks();
        blocks.push(block);
        let mut r = Self::with_blocks(blocks, order)?;
        let rows = match grading_weights {
            Some(w) => {
                if w.len() != self.gradings.len() || w.iter().any(|x| x.len() != added) {
                    return Err(Error::Config("grading extension has wrong shape".into()));
                }
                self.gradings
                    .iter()
                    .zip(w)
                    .map(|(row, ext)| row.iter().copied().chain(ext).collect())
                    .collect()
            }
            None => Vec::new(),
        };
        Arc::make_mut(&mut r).gradings = rows;
        Ok(r)
    }

    /// The ring without the given variables; the order is restricted.
    pub fn without_vars(&self, drop: &[usize]) -> Result<(Arc<PolyRing>, Vec<Option<usize>>)> {
        let mut remap = vec![None; self.nvars()];
        let mut next = 0;
        for (i, slot) in remap.iter_mut().enumerate() {
            if !drop.contains(&i) {
                *slot = Some(next);
                next += 1;
            }
        }
        let blocks = self
            .var_blocks()
            .into_iter()
            .map(|b| {
                let start = self.block_vars(&b.name).expect("own block").start;
                VarBlock {
                    vars: b
                        .vars
                        .into_iter()
                        .enumerate()
                        .filter(|(k, _)| !drop.contains(&(start + k)))
                        .map(|(_, v)| v)
                        .collect(),
                    ..b
                }
            })
            .filter(|b| !b.vars.is_empty())
            .collect();
        let mut r = Self::with_blocks(blocks, self.order.restricted(&remap))?;
        Arc::make_mut(&mut r).gradings = self
            .gradings
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(i, _)| remap[*i].is_some())
                    .map(|(_, &w)| w)
                    .collect()
            })
            .collect();
        Ok((r, remap))
    }

    /// A variable name not yet used in this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|k| format!("{stem}{k}"))
            .find(|n| self.var_index(n).is_none())
            .expect("unbounded search")
    }
}
