//! Common domination perfection: `γ(H) = α_c(H)` for every induced
//! subgraph `H`.
//!
//! Three deciders are provided. [`perfect_by_definition`] sweeps every
//! induced subgraph, [`perfect_by_gamma2`] only those with `γ(H) = 2`, and
//! [`perfect_by_theorem`] searches for the ten forbidden graphs.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::enumeration::enumerate_graphs;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{common_independence_within, domination_within};
use crate::patterns::{find_forbidden, Embedding, Pattern, PatternName};

/// Default order cap for the subset sweeps.
pub const DEFAULT_SWEEP_CAP: usize = 16;

/// Largest order accepted by [`search_minimal_imperfect`].
pub const MINIMAL_SEARCH_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerfectionError {
    #[error("order {order} exceeds the subset-sweep cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Definition,
    Gamma2,
    Theorem,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::Gamma2 => "gamma2",
            Method::Theorem => "theorem",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An induced subgraph with `γ ≠ α_c` (or `γ = 2, α_c = 3`).
    Subgraph { vertices: VertexSet, gamma: usize, common_ind: usize },
    /// An induced copy of a forbidden graph.
    Pattern { pattern: PatternName, embedding: Embedding },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl PerfectionVerdict {
    fn perfect(method: Method) -> Self {
        PerfectionVerdict { perfect: true, method, witness: None }
    }

    /// Recomputes the witness on `g`. Perfect verdicts carry no witness and
    /// always re-verify.
    pub fn reverify(&self, g: &Graph) -> bool {
        match (&self.witness, self.perfect) {
            (None, true) => true,
            (Some(Witness::Subgraph { vertices, gamma, common_ind }), false) => {
                vertices.is_subset(g.vertices())
                    && !vertices.is_empty()
                    && domination_within(g, *vertices).0 == *gamma
                    && common_independence_within(g, *vertices) == *common_ind
                    && gamma < common_ind
            }
            (Some(Witness::Pattern { pattern, embedding }), false) => {
                embedding.verify(g, Pattern::get(*pattern).graph())
            }
            _ => false,
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), PerfectionError> {
    if g.order() > cap {
        Err(PerfectionError::CapExceeded { order: g.order(), cap })
    } else {
        Ok(())
    }
}

/// Nonempty subsets of `universe`, by increasing size, lexicographic within
/// a size.
fn subsets_by_size(universe: VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = universe.to_vec();
    (1..=members.len()).flat_map(move |k| {
        members.clone().into_iter().combinations(k).map(VertexSet::from_iter).collect::<Vec<_>>()
    })
}

/// Checks every nonempty induced subgraph; the witness is the first
/// violating vertex set by size, then lexicographically.
pub fn perfect_by_definition(g: &Graph) -> Result<PerfectionVerdict, PerfectionError> {
    perfect_by_definition_capped(g, DEFAULT_SWEEP_CAP)
}

pub fn perfect_by_definition_capped(g: &Graph, cap: usize) -> Result<PerfectionVerdict, PerfectionError> {
    check_cap(g, cap)?;
    Ok(definition_sweep(g, g.vertices()).unwrap_or_else(|| PerfectionVerdict::perfect(Method::Definition)))
}

fn definition_sweep(g: &Graph, universe: VertexSet) -> Option<PerfectionVerdict> {
    subsets_by_size(universe).find_map(|s| {
        let gamma = domination_within(g, s).0;
        let common_ind = common_independence_within(g, s);
        (gamma != common_ind).then_some(PerfectionVerdict {
            perfect: false,
            method: Method::Definition,
            witness: Some(Witness::Subgraph { vertices: s, gamma, common_ind }),
        })
    })
}

/// Only induced subgraphs with `γ(H) = 2` are inspected; one with
/// `α_c(H) = 3` is a violation.
pub fn perfect_by_gamma2(g: &Graph) -> Result<PerfectionVerdict, PerfectionError> {
    perfect_by_gamma2_capped(g, DEFAULT_SWEEP_CAP)
}

pub fn perfect_by_gamma2_capped(g: &Graph, cap: usize) -> Result<PerfectionVerdict, PerfectionError> {
    check_cap(g, cap)?;
    let hit = subsets_by_size(g.vertices()).filter(|s| s.len() >= 2).find_map(|s| {
        let gamma = domination_within(g, s).0;
        if gamma != 2 {
            return None;
        }
        let common_ind = common_independence_within(g, s);
        (common_ind == 3).then_some(Witness::Subgraph { vertices: s, gamma, common_ind })
    });
    Ok(match hit {
        Some(w) => PerfectionVerdict { perfect: false, method: Method::Gamma2, witness: Some(w) },
        None => PerfectionVerdict::perfect(Method::Gamma2),
    })
}

/// Perfect iff none of `H1..H10` is induced in `g`.
pub fn perfect_by_theorem(g: &Graph) -> PerfectionVerdict {
    match find_forbidden(g) {
        None => PerfectionVerdict::perfect(Method::Theorem),
        Some((pattern, embedding)) => PerfectionVerdict {
            perfect: false,
            method: Method::Theorem,
            witness: Some(Witness::Pattern { pattern, embedding }),
        },
    }
}

pub fn classify(g: &Graph, method: Method) -> Result<PerfectionVerdict, PerfectionError> {
    match method {
        Method::Definition => perfect_by_definition(g),
        Method::Gamma2 => perfect_by_gamma2(g),
        Method::Theorem => Ok(perfect_by_theorem(g)),
    }
}

/// `γ(G) < α_c(G)` while every proper nonempty induced subgraph has
/// `γ = α_c`.
pub fn is_minimal_imperfect(g: &Graph) -> Result<bool, PerfectionError> {
    check_cap(g, DEFAULT_SWEEP_CAP)?;
    if g.order() == 0 {
        return Ok(false);
    }
    let all = g.vertices();
    if domination_within(g, all).0 >= common_independence_within(g, all) {
        return Ok(false);
    }
    Ok(subsets_by_size(all)
        .filter(|&s| s != all)
        .all(|s| domination_within(g, s).0 == common_independence_within(g, s)))
}

/// All minimal imperfect graphs of the given order, one canonical
/// representative per isomorphism class.
pub fn search_minimal_imperfect(order: usize) -> Result<Vec<Graph>, PerfectionError> {
    if order > MINIMAL_SEARCH_MAX_ORDER {
        return Err(PerfectionError::CapExceeded { order, cap: MINIMAL_SEARCH_MAX_ORDER });
    }
    let graphs = enumerate_graphs(order, None).expect("order within enumeration cap");
    let mut out = Vec::new();
    for g in graphs {
        if order == 0 {
            continue;
        }
        let all = g.vertices();
        if domination_within(&g, all).0 >= common_independence_within(&g, all) {
            continue;
        }
        // Perfection is hereditary, so perfect vertex-deleted subgraphs
        // cover every proper induced subgraph.
        let deletions_perfect = all.iter().all(|v| definition_sweep(&g, all.without(v)).is_none());
        if deletions_perfect && is_minimal_imperfect(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}
