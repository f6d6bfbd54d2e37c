//! Defining ideals of Rees and symmetric algebras, linear-type and
//! relation-type verdicts, and the explicit generators for trees.
//!
//! For `f = (f_1..f_m)` in a ring `R`, the presentation ring is `R[X_1..X_m]`
//! with fiber variables of bidegree `(0,1)`. The Rees ideal is the kernel of
//! `X_k ↦ f_k t`; the symmetric ideal is generated by `Σ c_k X_k` over the
//! first syzygies `c` of `f`.

use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::arith::{Field, Polynomial, PolyRing, Rational, VarBlock};
use crate::bei::{edge_binomial, EdgeBinomial};
use crate::error::{Error, Result};
use crate::graphs::{Edge, Graph};
use crate::groebner::Ideal;
use crate::ideal_ops::{eliminate_with_order, graded_membership, syzygies_first};

/// Name of the fiber block in presentation rings.
pub const FIBER_BLOCK: &str = "fiber";

/// Fiber variable name for an edge: `X_i_j`.
pub fn edge_fiber_name(e: Edge) -> String {
    format!("X_{}_{}", e.0, e.1)
}

/// The presentation ring of a Rees algebra together with its generators.
/// Kernel and symmetric ideal are computed once and cached.
#[derive(Debug)]
pub struct ReesSetup<K: Field = Rational> {
    f: Vec<Polynomial<K>>,
    edges: Option<Vec<Edge>>,
    ring: Arc<PolyRing>,
    fiber_start: usize,
    ext: Arc<PolyRing>,
    kernel: OnceLock<Ideal<K>>,
    sym: OnceLock<Ideal<K>>,
}

impl<K: Field> ReesSetup<K> {
    /// Fiber variables `X_1..X_m`.
    pub fn new(f: &[Polynomial<K>]) -> Result<Self> {
        let names = (1..=f.len()).map(|k| format!("X_{k}")).collect();
        Self::with_names(f, names)
    }

    /// Fiber variables `X_i_j`, one per edge binomial.
    pub fn for_edges(f: &[EdgeBinomial<K>]) -> Result<Self> {
        let polys: Vec<Polynomial<K>> = f.iter().map(|b| b.polynomial.clone()).collect();
        let mut s = Self::with_names(&polys, f.iter().map(|b| edge_fiber_name(b.edge)).collect())?;
        s.edges = Some(f.iter().map(|b| b.edge).collect());
        Ok(s)
    }

    pub fn with_names(f: &[Polynomial<K>], names: Vec<String>) -> Result<Self> {
        let Some(first) = f.first() else {
            return Err(Error::Usage("no generators".into()));
        };
        if names.len() != f.len() {
            return Err(Error::Usage("one fiber name per generator required".into()));
        }
        let base = first.ring().clone();
        let f: Vec<Polynomial<K>> = f.iter().map(|p| p.map_into(&base)).collect::<Result<_>>()?;
        if let Some(k) = f.iter().position(Polynomial::is_zero) {
            return Err(Error::Usage(format!("generator {} is zero", k + 1)));
        }
        let n = base.nvars();
        let m = f.len();
        // Fine gradings carry over when every generator is homogeneous for them.
        let rows: Option<Vec<Vec<u32>>> = base
            .gradings()
            .iter()
            .map(|row| {
                f.iter()
                    .map(|p| {
                        p.is_homogeneous_wrt(row)
                            .then(|| p.terms()[0].mono.weighted_degree(row))
                    })
                    .collect::<Option<Vec<u32>>>()
            })
            .collect();
        let order = base.order().with_appended(n, m, true);
        let ring = base.with_block_appended(VarBlock::fiber(FIBER_BLOCK, names), order, rows.clone())?;
        let t = ring.fresh_name("t");
        let ext_order = ring.order().with_appended(n + m, 1, true);
        let t_rows = rows.map(|r| vec![vec![0]; r.len()]);
        let t_rows = if ring.gradings().is_empty() { None } else { t_rows };
        let ext = ring.with_block_appended(VarBlock::base(&ring.fresh_name("aux"), [t]), ext_order, t_rows)?;
        Ok(ReesSetup {
            f,
            edges: None,
            ring,
            fiber_start: n,
            ext,
            kernel: OnceLock::new(),
            sym: OnceLock::new(),
        })
    }

    /// `R[X_1..X_m]`, ordered with the fiber block first.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn base_ring(&self) -> &Arc<PolyRing> {
        self.f[0].ring()
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.f
    }

    pub fn edges(&self) -> Option<&[Edge]> {
        self.edges.as_deref()
    }

    /// The fiber variable of generator `k` (0-based).
    pub fn fiber_var(&self, k: usize) -> Polynomial<K> {
        Polynomial::var_at(&self.ring, self.fiber_start + k)
    }

    fn lift(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        p.map_into(&self.ring)
    }

    fn degree_weights(&self) -> Vec<u32> {
        let n = self.fiber_start;
        let fdeg = self.f.iter().map(|p| p.total_degree().unwrap_or(1).max(1));
        std::iter::repeat_n(1, n).chain(fdeg).chain([0]).collect()
    }

    /// Kernel of `X_k ↦ f_k t`, by eliminating `t` from `(X_k − f_k t)`.
    pub fn kernel(&self) -> Result<&Ideal<K>> {
        if let Some(k) = self.kernel.get() {
            return Ok(k);
        }
        let t = self.ext.nvars() - 1;
        let tv = Polynomial::var_at(&self.ext, t);
        let gens = self
            .f
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let x = Polynomial::var_at(&self.ext, self.fiber_start + k);
                Ok(&x - &(&p.map_into(&self.ext)? * &tv))
            })
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(&self.ext, gens)?;
        let elim = eliminate_with_order(&ideal, &[t], self.ext.order().clone(), Some(self.degree_weights()), None)?;
        let weights: Vec<u32> = self.degree_weights()[..self.ring.nvars()].to_vec();
        let kernel = if **elim.ideal.ring() == *self.ring {
            elim.ideal.with_sugar_weights(weights)
        } else {
            return Err(Error::Internal("elimination landed in an unexpected ring".into()));
        };
        Ok(self.kernel.get_or_init(|| kernel))
    }

    /// Linear forms `Σ c_k X_k` over the first syzygies of `f`.
    pub fn sym(&self) -> Result<&Ideal<K>> {
        if let Some(s) = self.sym.get() {
            return Ok(s);
        }
        let mut gens = Vec::new();
        for s in syzygies_first(&self.f)? {
            let mut acc = Polynomial::zero(&self.ring);
            for (k, c) in s.coefficients.iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &(&self.lift(c)? * &self.fiber_var(k));
                }
            }
            if !acc.is_zero() {
                gens.push(acc.monic());
            }
        }
        gens.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        gens.dedup();
        let weights: Vec<u32> = self.degree_weights()[..self.ring.nvars()].to_vec();
        let sym = Ideal::new(&self.ring, gens)?.with_sugar_weights(weights);
        Ok(self.sym.get_or_init(|| sym))
    }

    /// `F(f_1..f_m)` in the base ring.
    pub fn evaluate(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        evaluate_relation(p, &self.f)
    }
}

/// Substitutes `X_k ↦ f_k` for the fiber variables of `p`'s ring (in block order)
/// and maps base variables into the ring of `f` by name.
pub fn evaluate_relation<K: Field>(p: &Polynomial<K>, f: &[Polynomial<K>]) -> Result<Polynomial<K>> {
    let Some(first) = f.first() else {
        return Err(Error::Usage("no generators to evaluate at".into()));
    };
    let target = first.ring().clone();
    let ring = p.ring();
    let fibers = ring.fiber_vars();
    let mut images = Vec::with_capacity(ring.nvars());
    for v in 0..ring.nvars() {
        if let Some(k) = fibers.iter().position(|&u| u == v) {
            match f.get(k) {
                Some(fk) => images.push(fk.map_into(&target)?),
                None if !p.uses_var(v) => images.push(Polynomial::zero(&target)),
                None => {
                    return Err(Error::Usage(format!(
                        "fiber variable {} has no generator",
                        ring.var_name(v)
                    )))
                }
            }
        } else {
            match target.var_index(ring.var_name(v)) {
                Some(i) => images.push(Polynomial::var_at(&target, i)),
                None if !p.uses_var(v) => images.push(Polynomial::zero(&target)),
                None => {
                    return Err(Error::Usage(format!(
                        "variable {} is missing from the generators' ring",
                        ring.var_name(v)
                    )))
                }
            }
        }
    }
    p.substitute(&images)
}

pub fn rees_ideal<K: Field>(f: &[Polynomial<K>]) -> Result<Ideal<K>> {
    ReesSetup::new(f)?.kernel().cloned()
}

pub fn sym_ideal<K: Field>(f: &[Polynomial<K>]) -> Result<Ideal<K>> {
    ReesSetup::new(f)?.sym().cloned()
}

/// Relation type, exact or bounded below when minimal generators reach the cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationType {
    Exact(u32),
    AtLeast(u32),
}

impl std::fmt::Display for RelationType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationType::Exact(r) => write!(f, "{r}"),
            RelationType::AtLeast(r) => write!(f, ">= {r}"),
        }
    }
}

impl RelationType {
    fn to_json(self) -> Value {
        match self {
            RelationType::Exact(r) => json!(r),
            RelationType::AtLeast(r) => json!(format!(">={r}")),
        }
    }
}

fn fiber_degree<K: Field>(p: &Polynomial<K>) -> u32 {
    p.bidegree().map(|d| d.1).unwrap_or_else(|| {
        p.terms().iter().map(|t| p.ring().bidegree(&t.mono).1).max().unwrap_or(0)
    })
}

/// Smallest `r` such that kernel elements of fiber degree `≤ r` generate the kernel.
/// Tests `r = 1..cap−1`; if all fail the answer is `AtLeast(cap)`.
pub fn relation_type_of<K: Field>(setup: &ReesSetup<K>, cap: u32) -> Result<RelationType> {
    if cap == 0 {
        return Err(Error::Usage("cap must be at least 1".into()));
    }
    let kernel = setup.kernel()?;
    let gb = kernel.groebner_basis()?;
    let elems = gb.elements();
    let top = elems.iter().map(fiber_degree).max().unwrap_or(0);
    if top <= 1 {
        return Ok(RelationType::Exact(1));
    }
    for r in 1..cap {
        if top <= r {
            return Ok(RelationType::Exact(r));
        }
        let low = Ideal::new(setup.ring(), elems.iter().filter(|g| fiber_degree(*g) <= r).cloned())?
            .with_limits(kernel.limits());
        let low_gb = low.groebner_basis()?;
        let mut all = true;
        for g in elems.iter().filter(|g| fiber_degree(*g) > r) {
            if !low_gb.contains(g)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(RelationType::Exact(r));
        }
    }
    Ok(RelationType::AtLeast(cap))
}

pub fn relation_type<K: Field>(f: &[Polynomial<K>], cap: u32) -> Result<RelationType> {
    relation_type_of(&ReesSetup::new(f)?, cap)
}

/// A kernel element outside the symmetric ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<K: Field = Rational> {
    pub element: Polynomial<K>,
    pub bidegree: (u32, u32),
}

#[derive(Debug, Clone)]
pub struct ReesResult<K: Field = Rational> {
    pub kernel: Ideal<K>,
    pub sym: Ideal<K>,
    pub linear_type: bool,
    pub relation_type: RelationType,
    pub certificate: Option<Certificate<K>>,
}

fn gens_json<K: Field>(i: &Ideal<K>) -> Value {
    Value::Array(
        i.generators()
            .iter()
            .map(|g| {
                json!({
                    "polynomial": g.to_string(),
                    "bidegree": g.bidegree().map(|(a, b)| vec![a, b]),
                })
            })
            .collect(),
    )
}

impl<K: Field> ReesResult<K> {
    pub fn to_json(&self) -> Value {
        json!({
            "kernel": gens_json(&self.kernel),
            "sym": gens_json(&self.sym),
            "linear_type": self.linear_type,
            "relation_type": self.relation_type.to_json(),
            "certificate": self.certificate.as_ref().map(|c| json!({
                "element": c.element.to_string(),
                "bidegree": [c.bidegree.0, c.bidegree.1],
            })),
        })
    }
}

/// Decides whether `sym = kernel`. On failure returns a kernel basis element of
/// least bidegree that is not in `sym`, checked to evaluate to zero and to fail
/// graded membership.
pub fn linear_type_of<K: Field>(setup: &ReesSetup<K>) -> Result<ReesResult<K>> {
    let kernel = setup.kernel()?;
    let sym = setup.sym()?;
    let sym_gb = sym.groebner_basis()?;
    let mut outside = Vec::new();
    for g in kernel.groebner_basis()?.elements() {
        if !sym_gb.contains(g)? {
            outside.push(g.clone());
        }
    }
    let certificate = match outside.iter().filter_map(|g| Some((g.bidegree()?, g))).min_by_key(|(d, _)| (d.1, d.0)) {
        None if outside.is_empty() => None,
        None => return Err(Error::Internal("kernel element is not bihomogeneous".into())),
        Some((bidegree, g)) => {
            if !setup.evaluate(g)?.is_zero() {
                return Err(Error::Internal("kernel element does not evaluate to zero".into()));
            }
            if graded_membership(g, sym.generators(), bidegree)? {
                return Err(Error::Internal("graded membership disagrees with the basis".into()));
            }
            Some(Certificate {
                element: g.clone(),
                bidegree,
            })
        }
    };
    let linear_type = certificate.is_none();
    let relation_type = if linear_type {
        RelationType::Exact(1)
    } else {
        relation_type_of(setup, 64)?
    };
    Ok(ReesResult {
        kernel: kernel.clone(),
        sym: sym.clone(),
        linear_type,
        relation_type,
        certificate,
    })
}

pub fn is_linear_type<K: Field>(f: &[Polynomial<K>]) -> Result<ReesResult<K>> {
    linear_type_of(&ReesSetup::new(f)?)
}

/// Koszul relations `f_e X_{e'} − f_{e'} X_e` for all edge pairs plus one
/// Plücker relation per claw.
///
/// For a claw with center `i` and leaves `j, k, l`, let `A = {i, j, k, l}` and
/// `p(v)` the position of `v` in sorted `A`. The relation is
/// `Σ_u (−1)^{p(i)+p(u)+1} f_{vw} X_{iu}` over the leaves `u`, where `{v, w}`
/// are the other two leaves.
pub fn tree_rees_generators<K: Field>(setup: &ReesSetup<K>, g: &Graph) -> Result<Vec<Polynomial<K>>> {
    if !g.is_tree() {
        return Err(Error::Usage("graph is not a tree".into()));
    }
    let edges = setup
        .edges()
        .ok_or_else(|| Error::Usage("presentation ring was not built from edges".into()))?;
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    if sorted != g.edge_vec() {
        return Err(Error::Usage("presentation ring edges differ from the graph".into()));
    }
    let ring = setup.ring();
    let x = |e: Edge| -> Result<Polynomial<K>> {
        let k = edges.iter().position(|&d| d == e).expect("edge of the tree");
        Ok(setup.fiber_var(k))
    };
    let f = |e: Edge| -> Result<Polynomial<K>> { edge_binomial(ring, e) };
    let mut out = Vec::new();
    for (a, &e) in sorted.iter().enumerate() {
        for &d in &sorted[a + 1..] {
            out.push(&(&f(e)? * &x(d)?) - &(&f(d)? * &x(e)?));
        }
    }
    for i in g.vertices() {
        let nb: Vec<usize> = g.neighbors(i).iter().copied().collect();
        for (a, &j) in nb.iter().enumerate() {
            for (b, &k) in nb.iter().enumerate().skip(a + 1) {
                for &l in &nb[b + 1..] {
                    let mut set = [i, j, k, l];
                    set.sort_unstable();
                    let pos = |v: usize| set.iter().position(|&s| s == v).expect("member") + 1;
                    let mut rel = Polynomial::zero(ring);
                    for (u, v, w) in [(j, k, l), (k, j, l), (l, j, k)] {
                        let term = &f(Edge::new(v, w)?)? * &x(Edge::new(i, u)?)?;
                        rel = if (pos(i) + pos(u) + 1) % 2 == 0 { &rel + &term } else { &rel - &term };
                    }
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}
