//! Graph classes with reduced forbidden-subgraph criteria: trees, chordal
//! and block graphs, claw-free graphs, line and middle graphs, plus the
//! constructions producing the latter.

mod blocks;
mod chordal;
mod construct;
mod tree;

use thiserror::Error;

pub use blocks::{block_decomposition, is_block_graph, BlockDecomposition, BlockKind};
pub use chordal::{is_chordal, maximum_cardinality_search, perfect_elimination_ordering};
pub use construct::{corona_k1, line_graph, middle_graph, total_graph, Construction};
pub use tree::{classify_tree, tree_corollary_conditions, TreeClass, TreeConditions};

use crate::graph::{Distance, Graph, GraphError};
use crate::patterns::{contains_subgraph, first_induced, is_claw_free, Pattern, PatternName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not claw-free")]
    NotClawFree,
    #[error("graph is not a connected block graph")]
    NotConnectedBlockGraph,
    #[error("{what} would have {size} vertices (maximum {cap})")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// For chordal `g`: perfect iff free of `H1`, `H7`, `H8`.
pub fn chordal_corollary(g: &Graph) -> Result<bool, ClassError> {
    if !is_chordal(g) {
        return Err(ClassError::NotChordal);
    }
    Ok(first_induced(g, &[PatternName::H1, PatternName::H7, PatternName::H8]).is_none())
}

/// For claw-free `g`: perfect iff free of `H7`, `H8`, `H9`.
pub fn claw_free_corollary(g: &Graph) -> Result<bool, ClassError> {
    if !is_claw_free(g) {
        return Err(ClassError::NotClawFree);
    }
    Ok(first_induced(g, &[PatternName::H7, PatternName::H8, PatternName::H9]).is_none())
}

/// The block-graph characterization by diameter, inner blocks and
/// vertices lying in three or more blocks.
pub fn block_graph_corollary(g: &Graph) -> Result<bool, ClassError> {
    if g.order() == 0 || !g.is_connected() || !is_block_graph(g) {
        return Err(ClassError::NotConnectedBlockGraph);
    }
    let d = block_decomposition(g);
    let branching = d.vertices_in_at_least(3);
    let inner: Vec<_> = d.inner_blocks().collect();
    Ok(match g.diameter() {
        Distance::Finite(0..=2) => true,
        Distance::Finite(3) => branching.len() <= 1,
        Distance::Finite(4) => {
            let all_inner_small = inner.iter().all(|b| b.len() == 2);
            let large: Vec<_> = inner.iter().filter(|b| b.len() >= 3).collect();
            let case_a = all_inner_small && branching.len() <= 1;
            let case_b = large.len() == 1
                && (branching.is_empty() || (branching.len() == 1 && branching.is_subset(*large[0])));
            case_a || case_b
        }
        _ => false,
    })
}

/// For `G = L(H)`: perfect iff none of `2P4`, `P7`, `C6` is a subgraph of `H`.
pub fn line_graph_criterion(h: &Graph) -> bool {
    [PatternName::TwoP4, PatternName::P7, PatternName::C6]
        .into_iter()
        .all(|p| !contains_subgraph(h, Pattern::get(p)))
}

/// `M(H)` is perfect iff `H` has no two non-adjacent (vertex-disjoint) edges.
pub fn middle_graph_criterion(h: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    edges.iter().enumerate().all(|(i, &(a, b))| {
        edges[i + 1..].iter().all(|&(c, d)| a == c || a == d || b == c || b == d)
    })
}

/// The alternative phrasing: at most one nontrivial component, and that
/// component is a star.
pub fn single_star_component(h: &Graph) -> bool {
    let nontrivial: Vec<_> = h.connected_components().into_iter().filter(|c| c.len() >= 2).collect();
    match nontrivial.as_slice() {
        [] => true,
        [c] => {
            let comp = h.induced_subgraph(*c);
            comp.is_tree() && (0..comp.order()).any(|v| comp.degree(v) == comp.order() - 1)
        }
        _ => false,
    }
}
