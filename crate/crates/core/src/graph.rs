//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so every vertex set
//! fits in a single machine word and set algebra is a handful of
//! instructions. All other modules are written against [`Graph`] and
//! [`VertexSet`].

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
}

/// A set of vertices, stored as a bitmask.
///
/// A `VertexSet` does not remember the order of the graph it was built
/// for; [`Graph::vertex_set`] and [`Graph::check_set`] validate membership.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n - 1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub const fn above(self, v: usize) -> Self {
        if v >= 63 {
            VertexSet(0)
        } else {
            VertexSet(self.0 & (u64::MAX << (v + 1)))
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending member sequences.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

macro_rules! set_op {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}

set_op!(BitOr, bitor, |);
set_op!(BitAnd, bitand, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

/// Shortest-path distance; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// An undirected simple graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    size: usize,
}

impl Graph {
    /// Graph of order `n` with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order: n });
        }
        Ok(Graph { adj: vec![0; n], size: 0 })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.size = g.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows.
    ///
    /// Callers inside the crate guarantee symmetry and the absence of loops.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &r)| r >> v & 1 == 0));
        let size = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { adj, size }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let off = self.order();
        Graph::from_edges(
            off + other.order(),
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.neighbors(v))
    }

    /// `N(S)`, the union of open neighborhoods.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.neighbors(u).above(u).iter().map(move |v| (u, v)))
    }

    /// Validates a set of vertex indices against this graph.
    pub fn vertex_set<I>(&self, vertices: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::EMPTY;
        for v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match (s - self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() }),
        }
    }

    /// `G[S]`, relabeled `0..|S|` by ascending original index.
    ///
    /// # Panics
    ///
    /// If `s` contains a vertex outside the graph.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        assert!(s.is_subset(self.vertices()), "vertex set {s:?} not inside graph of order {}", self.order());
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&v| {
                let row = self.neighbors(v) & s;
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| row.contains(w))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![0u64; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(adj)
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.order()];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        let mut seen = VertexSet::singleton(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].finite().expect("queued vertices are reached");
            for w in (self.neighbors(u) - seen).iter() {
                seen.insert(w);
                dist[w] = Distance::Finite(d + 1);
                queue.push_back(w);
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        assert!(u < self.order() && v < self.order());
        self.distances_from(u)[v]
    }

    /// Largest pairwise distance; `Infinite` for disconnected graphs,
    /// `Finite(0)` when the order is at most one.
    pub fn diameter(&self) -> Distance {
        (0..self.order())
            .flat_map(|u| self.distances_from(u))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut reached = VertexSet::singleton(v);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let next = self.neighborhood_of(frontier) - reached;
            reached |= next;
            frontier = next;
        }
        reached
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size + 1 == self.order() && self.is_connected()
    }

    /// True iff no edge joins two members of `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.neighbors(v) & s).is_empty())
    }

    /// True iff `N[S] = V(G)`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood_of(s) & self.vertices() == self.vertices()
    }

    /// True iff `s` induces a complete subgraph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
