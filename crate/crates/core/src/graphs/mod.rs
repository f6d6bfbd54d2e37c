//! Simple graphs on vertices `1..=n`, structural analysis, edge orderings of
//! trees and unicyclic graphs, neighborhood completion and graph families.

mod families;
mod induced;
mod io;
mod ordering;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use families::{cycle, double_broom, make_cnk, nonisomorphic_trees, path, star, trees_up_to};
pub use induced::{contains_induced, MAX_PATTERN_VERTICES};
pub use io::{parse_graph, GraphJson};
pub use ordering::{tree_edge_ordering, unicyclic_edge_ordering, unicyclic_rooting, EdgeOrdering, RootedTree};

/// An unordered pair `{a, b}` stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(i: usize, j: usize) -> Result<Edge> {
        if i == j {
            return Err(Error::Input(format!("loop at vertex {i}")));
        }
        Ok(Edge(i.min(j), i.max(j)))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint other than `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A simple undirected graph; vertices are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<BTreeSet<usize>>,
}

/// Output of [`graph_analyze`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub n: usize,
    pub edge_count: usize,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub components: Vec<Vec<usize>>,
    pub pendant_vertices: Vec<usize>,
    pub bridges: Vec<Edge>,
    pub degrees: BTreeMap<usize, usize>,
    pub neighborhoods: BTreeMap<usize, Vec<usize>>,
}

/// Builds a graph; duplicate pairs collapse, loops and out-of-range labels are rejected.
pub fn graph_from_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
    let mut g = Graph {
        n,
        edges: BTreeSet::new(),
        adj: vec![BTreeSet::new(); n + 1],
    };
    for (i, j) in pairs {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Input(format!("edge {{{i},{j}}} outside vertices 1..{n}")));
        }
        g.insert(Edge::new(i, j)?);
    }
    Ok(g)
}

impl Graph {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        graph_from_edges(n, pairs)
    }

    pub fn edgeless(n: usize) -> Graph {
        graph_from_edges(n, []).expect("no edges")
    }

    fn insert(&mut self, e: Edge) {
        if self.edges.insert(e) {
            self.adj[e.0].insert(e.1);
            self.adj[e.1].insert(e.0);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i.max(j) <= self.n && self.adj[i].contains(&j)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        if e.1 > self.n {
            return Err(Error::Input(format!("edge {e} outside vertices 1..{}", self.n)));
        }
        let mut g = self.clone();
        g.insert(e);
        Ok(g)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        if g.edges.remove(&e) {
            g.adj[e.0].remove(&e.1);
            g.adj[e.1].remove(&e.0);
        }
        g
    }

    /// Same edges on `n ≥ self.n()` vertices; the new vertices are isolated.
    pub fn with_vertex_count(&self, n: usize) -> Result<Graph> {
        if n < self.n {
            return Err(Error::Usage("cannot drop vertices".into()));
        }
        graph_from_edges(n, self.edges().map(|e| (e.0, e.1)))
    }

    /// Disjoint union; the second graph's labels are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let s = self.n;
        graph_from_edges(
            s + other.n,
            self.edges().map(|e| (e.0, e.1)).chain(other.edges().map(|e| (e.0 + s, e.1 + s))),
        )
        .expect("labels in range")
    }

    /// Relabels by `map[v]` (index 0 unused); `map` must be a permutation of `1..=n`.
    pub fn relabeled(&self, map: &[usize]) -> Result<Graph> {
        graph_from_edges(self.n, self.edges().map(|e| (map[e.0], map[e.1])))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.edge_count() == self.n
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Whether removing `e` (an edge of the graph) increases the component count.
    pub fn is_bridge(&self, e: Edge) -> bool {
        self.contains_edge(e) && !self.connected_avoiding(e.0, e.1, e)
    }

    fn connected_avoiding(&self, from: usize, to: usize, skip: Edge) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &w in &self.adj[v] {
                if !seen[w] && Edge(v.min(w), v.max(w)) != skip {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    pub fn bridges(&self) -> Vec<Edge> {
        self.edges().filter(|&e| self.is_bridge(e)).collect()
    }

    /// All simple paths `from = v_0, v_1, ..., v_k = to`, each as its vertex list.
    /// `max_inner` bounds the number of inner vertices.
    pub fn simple_paths(&self, from: usize, to: usize, max_inner: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![from];
        let mut on = vec![false; self.n + 1];
        on[from] = true;
        self.paths_rec(to, max_inner.unwrap_or(usize::MAX), &mut path, &mut on, &mut out);
        out
    }

    fn paths_rec(&self, to: usize, cap: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = *path.last().expect("nonempty");
        for &w in &self.adj[v] {
            if w == to {
                let mut p = path.clone();
                p.push(to);
                out.push(p);
            } else if !on[w] && path.len() <= cap {
                on[w] = true;
                path.push(w);
                self.paths_rec(to, cap, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }

    /// The induced subgraph on `vs`, relabeled `1..=vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
        let pairs = self
            .edges()
            .filter_map(|e| Some((*pos.get(&e.0)?, *pos.get(&e.1)?)));
        graph_from_edges(vs.len(), pairs.collect::<Vec<_>>()).expect("in range")
    }
}

pub fn graph_analyze(g: &Graph) -> GraphReport {
    GraphReport {
        n: g.n(),
        edge_count: g.edge_count(),
        is_tree: g.is_tree(),
        is_unicyclic: g.is_unicyclic(),
        components: g.components(),
        pendant_vertices: g.pendant_vertices(),
        bridges: g.bridges(),
        degrees: g.vertices().map(|v| (v, g.degree(v))).collect(),
        neighborhoods: g.vertices().map(|v| (v, g.neighbors(v).iter().copied().collect())).collect(),
    }
}

/// `G` plus every pair inside `N_G(i)` and every pair inside `N_G(j)`, for `e = {i, j}` not an edge.
pub fn neighbor_completion(g: &Graph, e: Edge) -> Result<Graph> {
    if g.contains_edge(e) {
        return Err(Error::Usage(format!("{e} is already an edge")));
    }
    if e.1 > g.n() {
        return Err(Error::Input(format!("{e} outside vertices 1..{}", g.n())));
    }
    let mut out = g.clone();
    for v in [e.0, e.1] {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for (a, &k) in nb.iter().enumerate() {
            for &l in &nb[a + 1..] {
                out.insert(Edge(k, l));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
