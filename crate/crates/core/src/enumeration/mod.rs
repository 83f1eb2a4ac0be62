//! Isomorphism-free generation of small graphs and trees, canonical forms,
//! and the exhaustive verification drivers.

mod canon;
mod verify;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::classes;
use crate::formats::emit_graph6;
use crate::graph::{Graph, VertexSet};
use crate::patterns::is_claw_free;

pub use verify::{
    verify_block_graph_corollary, verify_chain, verify_chordal_corollary, verify_claw_free_corollary,
    verify_corollaries, verify_line_graph_corollary, verify_middle_graph_corollary, verify_theorem,
    verify_tree_corollary, Counterexample, Universe, VerificationReport, COUNTEREXAMPLE_CAP,
};

pub(crate) use canon::canonical_labeling;

/// Largest order for [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 10;
/// Largest order for unrestricted enumeration.
pub const GRAPH_MAX_ORDER: usize = 8;
/// Largest order for tree enumeration.
pub const TREE_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the cap of {cap} for {what}")]
    CapExceeded { order: usize, cap: usize, what: &'static str },
}

/// A labeling-independent representative: the smallest graph6 token over
/// all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub token: String,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, EnumerationError> {
    if g.order() > CANONICAL_MAX_ORDER {
        return Err(EnumerationError::CapExceeded {
            order: g.order(),
            cap: CANONICAL_MAX_ORDER,
            what: "canonical forms",
        });
    }
    Ok(canonical_form_unchecked(g))
}

pub(crate) fn canonical_form_unchecked(g: &Graph) -> CanonicalForm {
    let canonical = canonical_labeling(g).apply(g);
    CanonicalForm { order: g.order(), token: emit_graph6(&canonical).expect("small order") }
}

/// The canonically relabeled copy of `g` (order at most 16).
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).apply(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassFilter {
    Connected,
    Tree,
    Chordal,
    BlockGraph,
    ClawFree,
}

impl ClassFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassFilter::Connected => "connected",
            ClassFilter::Tree => "tree",
            ClassFilter::Chordal => "chordal",
            ClassFilter::BlockGraph => "block-graph",
            ClassFilter::ClawFree => "claw-free",
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            ClassFilter::Connected => g.is_connected(),
            ClassFilter::Tree => g.is_tree(),
            ClassFilter::Chordal => classes::is_chordal(g),
            ClassFilter::BlockGraph => classes::is_block_graph(g),
            ClassFilter::ClawFree => is_claw_free(g),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            ClassFilter::Connected,
            ClassFilter::Tree,
            ClassFilter::Chordal,
            ClassFilter::BlockGraph,
            ClassFilter::ClawFree,
        ]
        .into_iter()
        .find(|c| c.as_str().eq_ignore_ascii_case(s))
        .ok_or_else(|| format!("unknown class filter {s:?}"))
    }
}

/// One canonical representative of every isomorphism class of the given
/// order, optionally restricted to a class. Graphs come out sorted by
/// canonical token.
pub fn enumerate_graphs(order: usize, filter: Option<ClassFilter>) -> Result<Vec<Graph>, EnumerationError> {
    if filter == Some(ClassFilter::Tree) {
        return enumerate_trees(order);
    }
    if order > GRAPH_MAX_ORDER {
        return Err(EnumerationError::CapExceeded { order, cap: GRAPH_MAX_ORDER, what: "graph enumeration" });
    }
    let level = graph_level(order);
    Ok(match filter {
        None => level.as_ref().clone(),
        Some(f) => level.iter().filter(|g| f.accepts(g)).cloned().collect(),
    })
}

/// All graphs of orders `1..=order_max`, concatenated by order.
pub fn enumerate_up_to(order_max: usize, filter: Option<ClassFilter>) -> Result<Vec<Graph>, EnumerationError> {
    let mut out = Vec::new();
    for n in 1..=order_max {
        out.extend(enumerate_graphs(n, filter)?);
    }
    Ok(out)
}

fn graph_levels() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::empty(0).expect("order 0")])]))
}

fn graph_level(order: usize) -> Arc<Vec<Graph>> {
    let mut levels = graph_levels().lock().expect("enumeration cache poisoned");
    while levels.len() <= order {
        let next = augment(levels.last().expect("level 0 present"));
        levels.push(Arc::new(next));
    }
    Arc::clone(&levels[order])
}

/// Canonical augmentation: every child of order `n + 1` is kept only when
/// deleting its canonically last vertex gives back the parent's class.
/// Siblings from one parent are deduplicated locally.
fn augment(parents: &[Graph]) -> Vec<Graph> {
    use rayon::prelude::*;

    let mut children: Vec<(u128, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let n = parent.order();
            let parent_code = canonical_labeling(parent).code;
            let mut seen: HashSet<u128> = HashSet::new();
            let mut out = Vec::new();
            for mask in 0u64..1 << n {
                let child = extend(parent, VertexSet::from_bits(mask));
                let lab = canonical_labeling(&child);
                let last = lab.last_vertex().expect("child is nonempty");
                let accept = last == n || canonical_labeling(&child.delete_vertex(last)).code == parent_code;
                if accept && seen.insert(lab.code) {
                    out.push((lab.code, lab.apply(&child)));
                }
            }
            out
        })
        .collect();
    children.sort_by_key(|c| c.0);
    children.into_iter().map(|(_, g)| g).collect()
}

/// `g` plus a new vertex `n` adjacent to `nbrs`.
fn extend(g: &Graph, nbrs: VertexSet) -> Graph {
    let n = g.order();
    let mut rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits() | (nbrs.contains(v) as u64) << n).collect();
    rows.push(nbrs.bits());
    Graph::from_rows(rows)
}

/// Trees by leaf addition with per-level canonical deduplication.
pub fn enumerate_trees(order: usize) -> Result<Vec<Graph>, EnumerationError> {
    if order > TREE_MAX_ORDER {
        return Err(EnumerationError::CapExceeded { order, cap: TREE_MAX_ORDER, what: "tree enumeration" });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1).expect("order 1")];
    for _ in 1..order {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next: Vec<(u128, Graph)> = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let child = extend(t, VertexSet::singleton(v));
                let lab = canonical_labeling(&child);
                if seen.insert(lab.code) {
                    next.push((lab.code, lab.apply(&child)));
                }
            }
        }
        next.sort_by_key(|c| c.0);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}
