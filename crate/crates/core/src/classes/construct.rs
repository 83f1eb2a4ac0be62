use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ClassError;
use crate::graph::{Graph, MAX_ORDER};

fn too_large(what: &'static str, size: usize) -> ClassError {
    ClassError::TooLarge { what, size, cap: MAX_ORDER }
}

/// `L(H)`. Vertex `i` is the `i`-th edge of `H` in lexicographic order.
pub fn line_graph(h: &Graph) -> Result<Graph, ClassError> {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    if edges.len() > MAX_ORDER {
        return Err(too_large("line graph", edges.len()));
    }
    let mut adj = vec![0u64; edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(Graph::from_rows(adj))
}

/// `H ∘ K1`: vertex `v + n` is the new pendant neighbour of `v`.
pub fn corona_k1(h: &Graph) -> Result<Graph, ClassError> {
    let n = h.order();
    if 2 * n > MAX_ORDER {
        return Err(too_large("corona", 2 * n));
    }
    Ok(Graph::from_edges(2 * n, h.edges().chain((0..n).map(|v| (v, v + n))))?)
}

/// `M(H) = L(H ∘ K1)`.
pub fn middle_graph(h: &Graph) -> Result<Graph, ClassError> {
    if h.size() + h.order() > MAX_ORDER {
        return Err(too_large("middle graph", h.size() + h.order()));
    }
    line_graph(&corona_k1(h)?)
}

/// `T(H)` on `V(H) ∪ E(H)`: vertices keep their labels, edge `i` (in
/// lexicographic order) becomes vertex `n + i`.
pub fn total_graph(h: &Graph) -> Result<Graph, ClassError> {
    let n = h.order();
    let total = n + h.size();
    if total > MAX_ORDER {
        return Err(too_large("total graph", total));
    }
    let line = line_graph(h)?;
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.extend(line.edges().map(|(i, j)| (n + i, n + j)));
    for (i, (a, b)) in h.edges().enumerate() {
        edges.push((a, n + i));
        edges.push((b, n + i));
    }
    Ok(Graph::from_edges(total, edges)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Line,
    Corona,
    Middle,
    Total,
}

impl Construction {
    pub fn apply(self, h: &Graph) -> Result<Graph, ClassError> {
        match self {
            Construction::Line => line_graph(h),
            Construction::Corona => corona_k1(h),
            Construction::Middle => middle_graph(h),
            Construction::Total => total_graph(h),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Line => "line",
            Construction::Corona => "corona",
            Construction::Middle => "middle",
            Construction::Total => "total",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Construction::Line, Construction::Corona, Construction::Middle, Construction::Total]
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown construction {s:?}"))
    }
}
