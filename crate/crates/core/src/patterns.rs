//! The forbidden family `H1..H10`, a few utility patterns, and a
//! backtracking embedding search for induced and ordinary subgraphs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PatternName {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    Claw,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    C6,
    TwoP3,
    TwoP4,
}

impl PatternName {
    pub const FORBIDDEN: [PatternName; 10] = [
        PatternName::H1,
        PatternName::H2,
        PatternName::H3,
        PatternName::H4,
        PatternName::H5,
        PatternName::H6,
        PatternName::H7,
        PatternName::H8,
        PatternName::H9,
        PatternName::H10,
    ];

    pub const ALL: [PatternName; 20] = [
        PatternName::H1,
        PatternName::H2,
        PatternName::H3,
        PatternName::H4,
        PatternName::H5,
        PatternName::H6,
        PatternName::H7,
        PatternName::H8,
        PatternName::H9,
        PatternName::H10,
        PatternName::Claw,
        PatternName::P2,
        PatternName::P3,
        PatternName::P4,
        PatternName::P5,
        PatternName::P6,
        PatternName::P7,
        PatternName::C6,
        PatternName::TwoP3,
        PatternName::TwoP4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::H1 => "H1",
            PatternName::H2 => "H2",
            PatternName::H3 => "H3",
            PatternName::H4 => "H4",
            PatternName::H5 => "H5",
            PatternName::H6 => "H6",
            PatternName::H7 => "H7",
            PatternName::H8 => "H8",
            PatternName::H9 => "H9",
            PatternName::H10 => "H10",
            PatternName::Claw => "CLAW",
            PatternName::P2 => "P2",
            PatternName::P3 => "P3",
            PatternName::P4 => "P4",
            PatternName::P5 => "P5",
            PatternName::P6 => "P6",
            PatternName::P7 => "P7",
            PatternName::C6 => "C6",
            PatternName::TwoP3 => "2P3",
            PatternName::TwoP4 => "2P4",
        }
    }

    fn index(self) -> usize {
        PatternName::ALL.iter().position(|&p| p == self).expect("listed in ALL")
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown pattern {0:?}")]
pub struct UnknownPattern(pub String);

impl FromStr for PatternName {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        let alias = match upper.as_str() {
            "K13" | "K1,3" | "K_{1,3}" => "CLAW",
            other => other,
        };
        PatternName::ALL
            .into_iter()
            .find(|p| p.as_str() == alias)
            .ok_or_else(|| UnknownPattern(s.to_owned()))
    }
}

/// A named catalog graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: PatternName,
    graph: Graph,
}

const H1_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 5), (4, 5), (5, 6)];
const H2_EXTRA: &[(usize, usize)] = &[(3, 4)];
const H3_EXTRA: &[(usize, usize)] = &[(3, 6)];
const H4_EXTRA: &[(usize, usize)] = &[(2, 4), (2, 6)];
const H5_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 5), (3, 4), (4, 5), (5, 6), (2, 6)];
const H6_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 5), (3, 4), (3, 6), (4, 5), (5, 6), (2, 6)];
const H7_EDGES: &[(usize, usize)] = &[(1, 3), (3, 5), (2, 4), (4, 6)];
const H8_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (3, 5), (2, 4), (4, 6)];
const H9_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (3, 5), (5, 6), (2, 4), (4, 6)];
const H10_EDGES: &[(usize, usize)] = &[(1, 2), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)];

fn one_based(n: usize, lists: &[&[(usize, usize)]]) -> Graph {
    let edges = lists.iter().flat_map(|l| l.iter()).map(|&(u, v)| (u - 1, v - 1));
    Graph::from_edges(n, edges).expect("catalog edge lists are valid")
}

fn build(name: PatternName) -> Graph {
    use PatternName::*;
    let path = |n| Graph::path(n).expect("small");
    match name {
        H1 => one_based(6, &[H1_EDGES]),
        H2 => one_based(6, &[H1_EDGES, H2_EXTRA]),
        H3 => one_based(6, &[H1_EDGES, H2_EXTRA, H3_EXTRA]),
        H4 => one_based(6, &[H1_EDGES, H2_EXTRA, H3_EXTRA, H4_EXTRA]),
        H5 => one_based(6, &[H5_EDGES]),
        H6 => one_based(6, &[H6_EDGES]),
        H7 => one_based(6, &[H7_EDGES]),
        H8 => one_based(6, &[H8_EDGES]),
        H9 => one_based(6, &[H9_EDGES]),
        H10 => one_based(6, &[H10_EDGES]),
        Claw => Graph::star(3).expect("small"),
        P2 => path(2),
        P3 => path(3),
        P4 => path(4),
        P5 => path(5),
        P6 => path(6),
        P7 => path(7),
        C6 => Graph::cycle(6).expect("small"),
        TwoP3 => path(3).disjoint_union(&path(3)).expect("small"),
        TwoP4 => path(4).disjoint_union(&path(4)).expect("small"),
    }
}

fn isomorphic_same_order(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && find_embedding(a, b, EmbeddingMode::Induced).is_some()
}

impl Pattern {
    /// The whole catalog: `H1..H10` followed by the utility patterns.
    pub fn catalog() -> &'static [Pattern] {
        static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let catalog: Vec<Pattern> =
                PatternName::ALL.into_iter().map(|name| Pattern { name, graph: build(name) }).collect();
            let g = |n: PatternName| &catalog[n.index()].graph;
            assert!(isomorphic_same_order(g(PatternName::H7), g(PatternName::TwoP3)), "H7 must be 2P3");
            assert!(isomorphic_same_order(g(PatternName::H8), g(PatternName::P6)), "H8 must be P6");
            assert!(isomorphic_same_order(g(PatternName::H9), g(PatternName::C6)), "H9 must be C6");
            catalog
        })
    }

    /// `H1..H10`, in order.
    pub fn forbidden() -> &'static [Pattern] {
        &Pattern::catalog()[..10]
    }

    pub fn get(name: PatternName) -> &'static Pattern {
        &Pattern::catalog()[name.index()]
    }

    pub fn name(&self) -> PatternName {
        self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Edges on labels `1..=order`.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.graph.edges().map(|(u, v)| (u + 1, v + 1)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingMode {
    /// Adjacency and non-adjacency preserved.
    Induced,
    /// Pattern edges preserved; non-edges unconstrained.
    Subgraph,
}

/// An injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    /// `map[p]` is the host vertex hosting pattern vertex `p`.
    pub map: Vec<usize>,
    pub mode: EmbeddingMode,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Re-checks the embedding edge by edge.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.image().len() != k || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        (0..k).all(|p| {
            (p + 1..k).all(|q| {
                let pe = pattern.has_edge(p, q);
                let he = host.has_edge(self.map[p], self.map[q]);
                match self.mode {
                    EmbeddingMode::Induced => pe == he,
                    EmbeddingMode::Subgraph => !pe || he,
                }
            })
        })
    }
}

/// Order in which pattern vertices are placed: each next vertex has as
/// many already-placed neighbours as possible, so candidate sets shrink
/// early.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (pattern.vertices() - placed)
            .iter()
            .max_by_key(|&p| ((pattern.neighbors(p) & placed).len(), pattern.degree(p), std::cmp::Reverse(p)))
            .expect("vertices remain");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    mode: EmbeddingMode,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn place(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.host.vertices() - used;
        for &q in &self.order[..depth] {
            let hq = self.host.neighbors(self.map[q]);
            if self.pattern.has_edge(p, q) {
                cand &= hq;
            } else if self.mode == EmbeddingMode::Induced {
                cand = cand - hq;
            }
        }
        let need = self.pattern.degree(p);
        for h in cand.iter() {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[p] = h;
            if self.place(depth + 1, used.with(h)) {
                return true;
            }
        }
        false
    }
}

/// First embedding of `pattern` into `host` in backtracking order
/// (pattern vertices in [`placement_order`], host candidates ascending).
pub fn find_embedding(host: &Graph, pattern: &Graph, mode: EmbeddingMode) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() || (mode == EmbeddingMode::Subgraph && pattern.size() > host.size()) {
        return None;
    }
    let mut m = Matcher { host, pattern, mode, order: placement_order(pattern), map: vec![0; k] };
    m.place(0, VertexSet::EMPTY).then_some(Embedding { map: m.map, mode })
}

/// An induced copy of `pattern` in `host`, if any.
pub fn find_induced(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    find_embedding(host, pattern.graph(), EmbeddingMode::Induced)
}

/// True iff `pattern` is a (not necessarily induced) subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Pattern) -> bool {
    find_embedding(host, pattern.graph(), EmbeddingMode::Subgraph).is_some()
}

/// First pattern among `names` (in the given order) occurring induced in `g`.
pub fn first_induced(g: &Graph, names: &[PatternName]) -> Option<(PatternName, Embedding)> {
    names.iter().find_map(|&name| find_induced(g, Pattern::get(name)).map(|e| (name, e)))
}

/// The first member of `H1..H10` induced in `g`, if any.
pub fn find_forbidden(g: &Graph) -> Option<(PatternName, Embedding)> {
    first_induced(g, &PatternName::FORBIDDEN)
}

/// True iff `g` contains none of `H1..H10` as an induced subgraph.
pub fn forbidden_free(g: &Graph) -> bool {
    find_forbidden(g).is_none()
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_induced(g, Pattern::get(PatternName::Claw)).is_none()
}
