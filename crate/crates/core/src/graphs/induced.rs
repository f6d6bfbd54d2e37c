use super::Graph;
use crate::error::{Error, Result};

/// Largest pattern graph accepted by [`contains_induced`].
pub const MAX_PATTERN_VERTICES: usize = 12;

/// An embedding of `h` into `g` as an induced subgraph, if one exists.
///
/// The result lists the image of `h`'s vertex `k + 1` at index `k`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::ComputationLimit(format!(
            "pattern has {} vertices, limit {MAX_PATTERN_VERTICES}",
            h.n()
        )));
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    // Place high-degree, connected pattern vertices first.
    let mut order: Vec<usize> = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n() + 1];
    while order.len() < h.n() {
        let next = h
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (linked, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![0usize; h.n() + 1];
    let mut used = vec![false; g.n() + 1];
    if place(g, h, &order, 0, &mut image, &mut used) {
        Ok(Some(image[1..].to_vec()))
    } else {
        Ok(None)
    }
}

fn place(g: &Graph, h: &Graph, order: &[usize], k: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(k) else {
        return true;
    };
    for c in g.vertices() {
        if used[c] || g.degree(c) < h.degree(v) {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| h.has_edge(u, v) == g.has_edge(image[u], c));
        if !consistent {
            continue;
        }
        image[v] = c;
        used[c] = true;
        if place(g, h, order, k + 1, image, used) {
            return true;
        }
        used[c] = false;
    }
    false
}
