use std::collections::BTreeMap;

use super::{graph_from_edges, Graph};
use crate::error::{Error, Result};

/// The path `1 − 2 − … − n`.
pub fn path(n: usize) -> Graph {
    graph_from_edges(n, (1..n).map(|i| (i, i + 1))).expect("in range")
}

/// The cycle `1 − 2 − … − n − 1`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    graph_from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
}

/// `K_{1,k}` with center 1 and leaves `2..=k+1`.
pub fn star(k: usize) -> Graph {
    graph_from_edges(k + 1, (2..=k + 1).map(|j| (1, j))).expect("in range")
}

/// Two adjacent centers with `k` leaves each: center 1 with leaves `2..=k+1`,
/// center `k+2` with leaves `k+3..=2k+2`.
pub fn double_broom(k: usize) -> Graph {
    let c = k + 2;
    let pairs = (2..=k + 1).map(|j| (1, j)).chain([(1, c)]).chain((c + 1..=c + k).map(move |j| (c, j)));
    graph_from_edges(2 * k + 2, pairs.collect::<Vec<_>>()).expect("in range")
}

/// The cycle on `1..=n` with `k` pendant edges at every cycle vertex. The
/// pendants of cycle vertex `i` are `n + (i−1)k + 1 ..= n + ik`.
pub fn make_cnk(n: usize, k: usize) -> Result<Graph> {
    let c = cycle(n)?;
    let pend = (1..=n).flat_map(|i| (1..=k).map(move |t| (i, n + (i - 1) * k + t)));
    graph_from_edges(n * (k + 1), c.edges().map(|e| (e.0, e.1)).chain(pend).collect::<Vec<_>>())
}

fn encode(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(g, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn centers(g: &Graph) -> Vec<usize> {
    let mut deg: Vec<usize> = (0..=g.n()).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut alive: Vec<usize> = g.vertices().collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
        for &l in &leaves {
            for &w in g.neighbors(l) {
                deg[w] = deg[w].saturating_sub(1);
            }
            deg[l] = 0;
        }
        alive.retain(|v| !leaves.contains(v));
    }
    alive
}

/// A string equal for two trees exactly when they are isomorphic.
pub(crate) fn tree_canonical_form(g: &Graph) -> String {
    centers(g)
        .into_iter()
        .map(|c| encode(g, c, 0))
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of trees on `n ≥ 1` vertices,
/// sorted by canonical form.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let single = Graph::edgeless(1);
    level.insert(tree_canonical_form(&single), single);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in t.vertices() {
                let bigger = t
                    .with_vertex_count(k + 1)
                    .and_then(|g| g.with_edge(super::Edge(v, k + 1)))
                    .expect("fresh vertex");
                next.entry(tree_canonical_form(&bigger)).or_insert(bigger);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All non-isomorphic trees on `1..=n` vertices, by vertex count.
pub fn trees_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(nonisomorphic_trees).collect()
}
