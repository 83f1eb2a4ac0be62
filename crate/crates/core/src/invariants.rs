//! Exact domination and independence parameters.
//!
//! `γ` and `i` are found by increasing-cardinality search: for each
//! candidate size `k` the `k`-subsets are visited in lexicographic order
//! with infeasibility pruning, so the first hit is both optimal and the
//! lexicographically smallest optimal set. `α` uses branch and bound with
//! max-degree branching; its witness is then fixed vertex by vertex to the
//! lexicographically smallest maximum independent set.
//!
//! Every solver also comes in a `*_within` form that works on the
//! subgraph induced by a vertex mask without materialising it.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("parameter undefined on the empty graph")]
    EmptyGraph,
    #[error("vertex {vertex} is not a member of the given set")]
    NotInSet { vertex: usize },
    #[error(
        "inequality chain violated: gamma={gamma} i={ind_dom} alpha_c={common_ind} alpha={ind} (solver defect)"
    )]
    ChainViolated { gamma: usize, ind_dom: usize, common_ind: usize, ind: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(γ, i, α_c, α)` with optimal witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterProfile {
    pub gamma: usize,
    pub ind_dom: usize,
    pub common_ind: usize,
    pub ind: usize,
    pub witness_gamma: VertexSet,
    pub witness_ind_dom: VertexSet,
    pub witness_ind: VertexSet,
    /// Largest independent set size containing each vertex.
    pub per_vertex_ind: Vec<usize>,
}

impl ParameterProfile {
    pub fn chain_holds(&self) -> bool {
        self.gamma <= self.ind_dom && self.ind_dom <= self.common_ind && self.common_ind <= self.ind
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn nonempty(g: &Graph) -> Result<(), InvariantError> {
    if g.order() == 0 {
        Err(InvariantError::EmptyGraph)
    } else {
        Ok(())
    }
}

/// `γ(G)` and the lexicographically smallest γ-set.
pub fn domination_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    nonempty(g)?;
    Ok(domination_within(g, g.vertices()))
}

/// `i(G)` and the lexicographically smallest i-set.
pub fn independent_domination_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    nonempty(g)?;
    Ok(independent_domination_within(g, g.vertices()))
}

/// `α(G)` and the lexicographically smallest α-set. `α` of the empty
/// graph is 0.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    independence_within(g, g.vertices())
}

/// Size of a largest independent set containing `v`.
pub fn max_independent_with(g: &Graph, v: usize) -> Result<usize, InvariantError> {
    g.check_vertex(v)?;
    Ok(max_independent_with_within(g, g.vertices(), v))
}

/// `α_c(G)`: the minimum over vertices of [`max_independent_with`].
pub fn common_independence_number(g: &Graph) -> Result<usize, InvariantError> {
    nonempty(g)?;
    Ok(common_independence_within(g, g.vertices()))
}

/// `pn[v, S] = { w : N[w] ∩ S = {v} }`.
pub fn private_neighborhood(g: &Graph, v: usize, s: VertexSet) -> Result<VertexSet, InvariantError> {
    g.check_set(s)?;
    if !s.contains(v) {
        return Err(InvariantError::NotInSet { vertex: v });
    }
    let others = g.closed_neighborhood_of(s.without(v));
    Ok(g.closed_neighbors(v) - others)
}

pub fn parameter_profile(g: &Graph) -> Result<ParameterProfile, InvariantError> {
    nonempty(g)?;
    let all = g.vertices();
    let (gamma, witness_gamma) = domination_within(g, all);
    let (ind_dom, witness_ind_dom) = independent_domination_within(g, all);
    let (ind, witness_ind) = independence_within(g, all);
    let per_vertex_ind: Vec<usize> = all.iter().map(|v| max_independent_with_within(g, all, v)).collect();
    let common_ind = per_vertex_ind.iter().copied().min().expect("nonempty graph");
    let profile = ParameterProfile {
        gamma,
        ind_dom,
        common_ind,
        ind,
        witness_gamma,
        witness_ind_dom,
        witness_ind,
        per_vertex_ind,
    };
    if !profile.chain_holds() {
        return Err(InvariantError::ChainViolated { gamma, ind_dom, common_ind, ind });
    }
    Ok(profile)
}

// ---------------------------------------------------------------------------
// Mask-restricted solvers.

/// `γ(G[mask])` with the lexicographically smallest witness. Returns
/// `(0, ∅)` for an empty mask.
pub fn domination_within(g: &Graph, mask: VertexSet) -> (usize, VertexSet) {
    if mask.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let closed: Vec<VertexSet> = (0..g.order()).map(|v| g.closed_neighbors(v) & mask).collect();
    let upper = greedy_dominating(&closed, mask).len();
    let max_cover = mask.iter().map(|v| closed[v].len()).max().unwrap_or(1);
    let lower = mask.len().div_ceil(max_cover);
    let mut search = DomSearch { closed: &closed, mask, independent: false };
    for k in lower..=upper {
        if let Some(set) = search.find(k) {
            return (k, set);
        }
    }
    unreachable!("greedy dominating set bounds the search")
}

/// `i(G[mask])` with the lexicographically smallest witness.
pub fn independent_domination_within(g: &Graph, mask: VertexSet) -> (usize, VertexSet) {
    if mask.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let closed: Vec<VertexSet> = (0..g.order()).map(|v| g.closed_neighbors(v) & mask).collect();
    // Any maximal independent set dominates.
    let mut maximal = VertexSet::EMPTY;
    let mut free = mask;
    while let Some(v) = free.first() {
        maximal.insert(v);
        free = free - closed[v];
    }
    let max_cover = mask.iter().map(|v| closed[v].len()).max().unwrap_or(1);
    let lower = mask.len().div_ceil(max_cover);
    let mut search = DomSearch { closed: &closed, mask, independent: true };
    for k in lower..=maximal.len() {
        if let Some(set) = search.find(k) {
            return (k, set);
        }
    }
    unreachable!("a maximal independent set bounds the search")
}

fn greedy_dominating(closed: &[VertexSet], mask: VertexSet) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut undominated = mask;
    while !undominated.is_empty() {
        let best = mask
            .iter()
            .max_by_key(|&v| ((closed[v] & undominated).len(), std::cmp::Reverse(v)))
            .expect("mask is nonempty");
        chosen.insert(best);
        undominated = undominated - closed[best];
    }
    chosen
}

struct DomSearch<'a> {
    closed: &'a [VertexSet],
    mask: VertexSet,
    independent: bool,
}

impl DomSearch<'_> {
    fn find(&mut self, k: usize) -> Option<VertexSet> {
        self.extend(k, self.mask, VertexSet::EMPTY, self.mask)
    }

    /// Extends `chosen` by `slots` vertices drawn from `candidates`
    /// (all larger than every chosen vertex), in lexicographic order.
    fn extend(
        &self,
        slots: usize,
        candidates: VertexSet,
        chosen: VertexSet,
        undominated: VertexSet,
    ) -> Option<VertexSet> {
        if undominated.is_empty() {
            return Some(chosen);
        }
        if slots == 0 {
            return None;
        }
        // Every undominated vertex must still be reachable by a candidate.
        let mut best_gain = 0;
        for w in undominated.iter() {
            if (self.closed[w] & candidates).is_empty() {
                return None;
            }
        }
        for c in candidates.iter() {
            best_gain = best_gain.max((self.closed[c] & undominated).len());
        }
        if best_gain * slots < undominated.len() {
            return None;
        }
        for c in candidates.iter() {
            let gain = self.closed[c] & undominated;
            // A vertex adding nothing would leave a smaller dominating set,
            // which an earlier (smaller k) round would already have found.
            if gain.is_empty() {
                continue;
            }
            let mut next = candidates.above(c);
            if self.independent {
                next = next - self.closed[c];
            }
            if let Some(found) = self.extend(slots - 1, next, chosen.with(c), undominated - gain) {
                return Some(found);
            }
        }
        None
    }
}

/// `α(G[mask])` with the lexicographically smallest maximum independent set.
pub fn independence_within(g: &Graph, mask: VertexSet) -> (usize, VertexSet) {
    let target = alpha_value(g, mask);
    let mut chosen = VertexSet::EMPTY;
    let mut remaining = mask;
    while let Some(v) = remaining.first() {
        let rest = remaining.above(v) - g.neighbors(v);
        if chosen.len() + 1 + alpha_value(g, rest) == target {
            chosen.insert(v);
            remaining = rest;
        } else {
            remaining.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), target);
    (target, chosen)
}

/// Largest independent set of `G[mask]` containing `v`.
pub fn max_independent_with_within(g: &Graph, mask: VertexSet, v: usize) -> usize {
    debug_assert!(mask.contains(v));
    1 + alpha_value(g, mask - g.closed_neighbors(v))
}

/// `α_c(G[mask])`; 0 for an empty mask.
pub fn common_independence_within(g: &Graph, mask: VertexSet) -> usize {
    mask.iter().map(|v| max_independent_with_within(g, mask, v)).min().unwrap_or(0)
}

/// `α(G[mask])` by branch and bound.
pub fn alpha_value(g: &Graph, mask: VertexSet) -> usize {
    let mut best = 0;
    alpha_branch(g, mask, 0, &mut best);
    best
}

fn alpha_branch(g: &Graph, mut cand: VertexSet, mut size: usize, best: &mut usize) {
    loop {
        if size + cand.len() <= *best {
            return;
        }
        if cand.is_empty() {
            *best = size;
            return;
        }
        // Vertices of degree at most one lie in some maximum independent set.
        let mut max_v = usize::MAX;
        let mut max_d = 0;
        let mut reduced = false;
        for v in cand.iter() {
            let d = (g.neighbors(v) & cand).len();
            if d <= 1 {
                size += 1;
                cand = cand - g.closed_neighbors(v);
                reduced = true;
                break;
            }
            if d > max_d {
                max_d = d;
                max_v = v;
            }
        }
        if reduced {
            continue;
        }
        alpha_branch(g, cand - g.closed_neighbors(max_v), size + 1, best);
        cand.remove(max_v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::Pattern;

    fn h(k: usize) -> Graph {
        Pattern::forbidden()[k - 1].graph().clone()
    }

    /// Plain subset enumeration, independent of the search code above.
    fn brute(g: &Graph) -> (usize, usize, usize) {
        let n = g.order();
        let subsets = || (0u64..1 << n).map(VertexSet::from_bits);
        let gamma = subsets().filter(|&s| g.is_dominating(s)).map(|s| s.len()).min().unwrap();
        let i = subsets()
            .filter(|&s| g.is_dominating(s) && g.is_independent(s))
            .map(|s| s.len())
            .min()
            .unwrap();
        let a = subsets().filter(|&s| g.is_independent(s)).map(|s| s.len()).max().unwrap();
        (gamma, i, a)
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(domination_number(&k).unwrap().0, 1);
            assert_eq!(independence_number(&k).0, 1);
            assert_eq!(common_independence_number(&k).unwrap(), 1);
            for v in 0..n {
                assert_eq!(max_independent_with(&k, v).unwrap(), 1);
            }
        }
    }

    #[test]
    fn forbidden_graph_values() {
        assert_eq!(domination_number(&h(1)).unwrap(), (2, VertexSet::from_iter([0, 4])));
        assert_eq!(domination_number(&h(9)).unwrap().0, 2);
        assert_eq!(independent_domination_number(&h(1)).unwrap().0, 3);
        assert_eq!(independent_domination_number(&h(8)).unwrap().0, 2);
        for k in 1..=10 {
            assert_eq!(common_independence_number(&h(k)).unwrap(), 3, "H{k}");
        }
    }

    #[test]
    fn star_center_dominates_independently() {
        let claw = Graph::star(3).unwrap();
        assert_eq!(independent_domination_number(&claw).unwrap(), (1, VertexSet::singleton(0)));
    }

    #[test]
    fn independence_values_from_brute_force() {
        let h7 = h(7);
        assert_eq!(brute(&h7).2, 4);
        assert_eq!(independence_number(&h7).0, 4);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(brute(&c6).2, 3);
        assert_eq!(independence_number(&c6), (3, VertexSet::from_iter([0, 2, 4])));
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), (0, VertexSet::EMPTY));
    }

    #[test]
    fn per_vertex_independence() {
        // H1 label 1 lies in {1,4,6}.
        assert_eq!(max_independent_with(&h(1), 0).unwrap(), 3);
        assert_eq!(max_independent_with(&Graph::path(6).unwrap(), 1).unwrap(), 3);
        assert_eq!(max_independent_with(&Graph::path(5).unwrap(), 1).unwrap(), 2);
        assert_eq!(common_independence_number(&Graph::path(4).unwrap()).unwrap(), 2);
        assert!(max_independent_with(&h(1), 6).is_err());
    }

    #[test]
    fn private_neighborhoods() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(private_neighborhood(&p3, 1, VertexSet::singleton(1)).unwrap(), p3.vertices());
        // H1 labels 1 and 5 -> 0 and 4; private neighbours of 1 are labels 2 and 3.
        let s = VertexSet::from_iter([0, 4]);
        assert_eq!(private_neighborhood(&h(1), 0, s).unwrap(), VertexSet::from_iter([1, 2]));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(private_neighborhood(&k3, 0, VertexSet::from_iter([0, 1])).unwrap(), VertexSet::EMPTY);
        assert_eq!(
            private_neighborhood(&k3, 2, VertexSet::from_iter([0, 1])),
            Err(InvariantError::NotInSet { vertex: 2 })
        );
    }

    #[test]
    fn empty_graph_rejected() {
        let e = Graph::empty(0).unwrap();
        assert_eq!(domination_number(&e), Err(InvariantError::EmptyGraph));
        assert_eq!(independent_domination_number(&e), Err(InvariantError::EmptyGraph));
        assert_eq!(common_independence_number(&e), Err(InvariantError::EmptyGraph));
        assert!(parameter_profile(&e).is_err());
    }

    #[test]
    fn profiles() {
        let p = parameter_profile(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((p.gamma, p.ind_dom, p.common_ind, p.ind), (1, 1, 1, 1));
        let p = parameter_profile(&h(3)).unwrap();
        assert_eq!((p.gamma, p.ind_dom, p.common_ind), (2, 3, 3));
        assert!(p.ind >= 3);
        let h10 = h(10);
        assert_eq!(brute(&h10).2, 3);
        let p = parameter_profile(&h10).unwrap();
        assert_eq!((p.gamma, p.ind_dom, p.common_ind, p.ind), (2, 2, 3, 3));
        assert!(h10.is_dominating(p.witness_gamma));
        assert!(h10.is_independent(p.witness_ind));
    }

    #[test]
    fn lexicographically_smallest_witnesses() {
        // P6: γ-sets of size 2 are {1,4}; i-sets {1,4} too; α-sets {0,2,4},...
        let p6 = Graph::path(6).unwrap();
        assert_eq!(domination_number(&p6).unwrap().1, VertexSet::from_iter([1, 4]));
        assert_eq!(independent_domination_number(&p6).unwrap().1, VertexSet::from_iter([1, 4]));
        assert_eq!(independence_number(&p6).1, VertexSet::from_iter([0, 2, 4]));
    }

    #[test]
    fn within_empty_mask() {
        let g = Graph::path(3).unwrap();
        assert_eq!(domination_within(&g, VertexSet::EMPTY), (0, VertexSet::EMPTY));
        assert_eq!(common_independence_within(&g, VertexSet::EMPTY), 0);
    }
}
