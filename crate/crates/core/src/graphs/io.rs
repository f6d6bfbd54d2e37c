use serde::{Deserialize, Serialize};

use super::{graph_from_edges, Graph};
use crate::error::{Error, Result};

/// Wire form `{"n": 4, "edges": [[1,2],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|e| [e.0, e.1]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        graph_from_edges(j.n, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column(), format!("line {}: {e}", e.line())))?;
        Graph::try_from(j)
    }

    /// Edge-list text: one `i j` pair per line, `#` starts a comment. A line
    /// holding a single integer fixes the vertex count; otherwise it is the
    /// largest label seen.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut pairs = Vec::new();
        let mut offset = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let start = offset;
            offset += raw.len() + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(start, format!("line {}: expected integers", lineno + 1)))?;
            match nums.as_slice() {
                [n] if declared.is_none() && pairs.is_empty() => declared = Some(*n),
                [a, b] => pairs.push((*a, *b)),
                _ => {
                    return Err(Error::parse(
                        start,
                        format!("line {}: expected `i j` or a leading vertex count", lineno + 1),
                    ))
                }
            }
        }
        let n = declared.unwrap_or_else(|| pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
        graph_from_edges(n, pairs)
    }
}

/// Reads either format; text starting with `{` is JSON.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        Graph::from_json(text)
    } else {
        Graph::from_edge_list(text)
    }
}
