use std::collections::VecDeque;

use serde::Serialize;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// An ordered list of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeOrdering {
    pub edges: Vec<Edge>,
}

impl EdgeOrdering {
    pub fn new(edges: Vec<Edge>) -> Self {
        EdgeOrdering { edges }
    }

    /// Every edge of `g` exactly once.
    pub fn is_permutation_of(&self, g: &Graph) -> bool {
        let mut mine = self.edges.clone();
        mine.sort_unstable();
        mine == g.edge_vec()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A tree rooted at a pendant vertex with its level-by-level edge ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedTree {
    #[serde(skip)]
    graph: Graph,
    root: usize,
    /// `level[v]` for `v` in `1..=n`; index 0 unused.
    level: Vec<usize>,
    parent: Vec<Option<usize>>,
    ordered_edges: Vec<Edge>,
}

impl RootedTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn max_level(&self) -> usize {
        self.level[1..].iter().copied().max().unwrap_or(0)
    }

    /// Level of an edge: the level of its endpoint farther from the root.
    pub fn edge_level(&self, e: Edge) -> usize {
        self.level[e.0].max(self.level[e.1])
    }

    pub fn ordered_edges(&self) -> &[Edge] {
        &self.ordered_edges
    }

    pub fn ordering(&self) -> EdgeOrdering {
        EdgeOrdering::new(self.ordered_edges.clone())
    }
}

/// Orders the edges of a tree level by level, laid out left to right as in a
/// drawing: each level lists the children of the previous level's vertices in
/// that level's order, siblings by ascending label.
///
/// Sorting a whole level by label instead can separate siblings, and the
/// result need not be a p-sequence (e.g. the tree 1-3, 2-3, 2-6, 3-5, 4-5, 5-7).
///
/// `root` must be a pendant vertex; `None` picks the smallest one. A tree
/// without edges is rooted at its only vertex.
pub fn tree_edge_ordering(g: &Graph, root: Option<usize>) -> Result<RootedTree> {
    rooted(g, root, |v| v as i64)
}

/// Breadth-first layout with `rank` ordering siblings.
fn rooted(g: &Graph, root: Option<usize>, rank: impl Fn(usize) -> i64) -> Result<RootedTree> {
    if !g.is_tree() {
        return Err(Error::Usage("graph is not a tree".into()));
    }
    let root = match root {
        _ if g.edge_count() == 0 => 1,
        Some(r) if r >= 1 && r <= g.n() && g.degree(r) == 1 => r,
        Some(r) => return Err(Error::Usage(format!("root {r} is not a pendant vertex"))),
        None => g.pendant_vertices()[0],
    };
    let n = g.n();
    let mut level = vec![usize::MAX; n + 1];
    let mut parent = vec![None; n + 1];
    let mut ordered_edges = Vec::with_capacity(g.edge_count());
    level[0] = 0;
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let mut kids: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| level[w] == usize::MAX).collect();
        kids.sort_by_key(|&w| (rank(w), w));
        for w in kids {
            level[w] = level[v] + 1;
            parent[w] = Some(v);
            ordered_edges.push(Edge::new(v, w).expect("no loops"));
            queue.push_back(w);
        }
    }
    Ok(RootedTree {
        graph: g.clone(),
        root,
        level,
        parent,
        ordered_edges,
    })
}

/// The rooted spanning tree and closing edge behind [`unicyclic_edge_ordering`].
///
/// Candidates are a cycle edge `e` whose endpoints both have degree 2, and a
/// pendant root of `G − e` putting an endpoint of `e` on the deepest level.
/// The tree is laid out with every branch containing an endpoint of `e` to the
/// right of its siblings. Roots outside `e` are preferred, then the smallest
/// root, then the lexicographically smallest edge sequence.
///
/// Some graphs in the class admit no such root (the smallest is the triangle
/// 1-5-6 with paths 1-2-4 and 1-3-7 hanging off 1); they are `NotInClass`.
pub fn unicyclic_rooting(g: &Graph) -> Result<(RootedTree, Edge)> {
    if !g.is_unicyclic() {
        return Err(Error::Usage("graph is not unicyclic".into()));
    }
    let mut best: Option<((bool, usize, Vec<Edge>), RootedTree, Edge)> = None;
    for e in g.edges() {
        if g.is_bridge(e) || g.degree(e.0) != 2 || g.degree(e.1) != 2 {
            continue;
        }
        let t = g.without_edge(e);
        for r in t.pendant_vertices() {
            let plain = tree_edge_ordering(&t, Some(r))?;
            let m = plain.max_level();
            if plain.level(e.0) != m && plain.level(e.1) != m {
                continue;
            }
            // Branches holding an endpoint of e go rightmost.
            let mut late = vec![false; g.n() + 1];
            for end in [e.0, e.1] {
                let mut c = Some(end);
                while let Some(w) = c {
                    late[w] = true;
                    c = plain.parent(w);
                }
            }
            let rt = rooted(&t, Some(r), |w| i64::from(late[w]))?;
            let mut seq = rt.ordered_edges().to_vec();
            seq.push(e);
            let key = (e.contains(r), r, seq);
            if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                best = Some((key, rt, e));
            }
        }
    }
    best.map(|(_, rt, e)| (rt, e)).ok_or_else(|| {
        Error::NotInClass(
            "no cycle edge joins two vertices of degree 2 with one at the deepest level of a pendant rooting".into(),
        )
    })
}

/// Tree ordering of `G − e` followed by the closing edge `e`.
pub fn unicyclic_edge_ordering(g: &Graph) -> Result<EdgeOrdering> {
    let (rt, e) = unicyclic_rooting(g)?;
    let mut edges = rt.ordered_edges().to_vec();
    edges.push(e);
    Ok(EdgeOrdering::new(edges))
}
