//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's solvers, matcher or canonical labeling.

#![allow(dead_code)]

use std::collections::HashSet;

use domiperf::{Graph, VertexSet};
use itertools::Itertools;

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).bits()).collect()
}

fn closed(adj: &[u64], s: u64) -> u64 {
    let mut out = s;
    for (v, row) in adj.iter().enumerate() {
        if s >> v & 1 == 1 {
            out |= row;
        }
    }
    out
}

fn independent(adj: &[u64], s: u64) -> bool {
    adj.iter().enumerate().all(|(v, row)| s >> v & 1 == 0 || row & s == 0)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `(γ, i, α)` by scanning all `2^n` vertex subsets.
pub fn brute_parameters(g: &Graph) -> (usize, usize, usize) {
    let adj = rows(g);
    let all = full(g.order());
    let mut gamma = usize::MAX;
    let mut ind_dom = usize::MAX;
    let mut alpha = 0;
    for s in 0..=all {
        let size = s.count_ones() as usize;
        let dom = closed(&adj, s) == all;
        let ind = independent(&adj, s);
        if dom {
            gamma = gamma.min(size);
        }
        if dom && ind {
            ind_dom = ind_dom.min(size);
        }
        if ind {
            alpha = alpha.max(size);
        }
    }
    (gamma, ind_dom, alpha)
}

/// Greatest `r` such that every vertex lies in an independent set of size
/// at least `r`.
pub fn brute_common_independence(g: &Graph) -> usize {
    let adj = rows(g);
    let n = g.order();
    let independent_sets: Vec<u64> = (0..=full(n)).filter(|&s| independent(&adj, s)).collect();
    (0..=n)
        .rev()
        .find(|&r| {
            (0..n).all(|v| independent_sets.iter().any(|&s| s >> v & 1 == 1 && s.count_ones() as usize >= r))
        })
        .expect("r = 0 always qualifies")
}

/// Is `s` an independent dominating set? Checked edge by edge.
pub fn is_independent_dominating(g: &Graph, s: VertexSet) -> bool {
    let n = g.order();
    let independent = g.edges().all(|(u, v)| !(s.contains(u) && s.contains(v)));
    let dominating = (0..n).all(|v| s.contains(v) || (0..n).any(|u| s.contains(u) && g.has_edge(u, v)));
    independent && dominating
}

/// The graph with labeled upper-triangle bit pattern `bits`, where bit `k`
/// is the `k`-th pair `(i, j)`, `i < j`, in column order.
pub fn labeled_graph(n: usize, bits: u64) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, pairs.enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, e)| e)).unwrap()
}

/// Isomorphism-invariant code: the smallest upper-triangle bit string over
/// all `n!` relabelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                acc | 1 << (b * (b - 1) / 2 + a)
            })
        })
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes of labeled graphs on `n` vertices,
/// through brute-force canonical codes.
pub fn brute_class_count(n: usize) -> usize {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(|bits| brute_canonical_code(&labeled_graph(n, bits))).collect::<HashSet<_>>().len()
}

/// Injective maps of `pattern` into `host` preserving edges (and
/// non-edges when `induced`), by trying every ordered vertex tuple.
pub fn brute_embeds(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    let k = pattern.order();
    if k > host.order() {
        return false;
    }
    (0..host.order()).permutations(k).any(|map| {
        (0..k).tuple_combinations().all(|(a, b)| {
            let p = pattern.has_edge(a, b);
            let h = host.has_edge(map[a], map[b]);
            if induced {
                p == h
            } else {
                !p || h
            }
        })
    })
}

/// Unlabeled tree counts for orders `0..=max` by the rooted-tree recurrence
/// and the Otter dissimilarity formula.
pub fn otter_tree_counts(max: usize) -> Vec<u64> {
    // rooted[n]: rooted unlabeled trees on n vertices.
    let mut rooted = vec![0u64; max + 1];
    if max >= 1 {
        rooted[1] = 1;
    }
    for n in 1..max {
        let mut total = 0u64;
        for k in 1..=n {
            let d_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * rooted[d]).sum();
            total += d_sum * rooted[n - k + 1];
        }
        rooted[n + 1] = total / n as u64;
    }
    let mut free = vec![0u64; max + 1];
    for n in 1..=max {
        let mut pairs: u64 = (1..n).map(|i| rooted[i] * rooted[n - i]).sum();
        if n % 2 == 0 {
            pairs -= rooted[n / 2];
        }
        let t = rooted[n] - pairs / 2;
        free[n] = t;
    }
    free
}

/// The tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// `G(n, 1/2)`-style random graph from a seeded generator.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Members of `s` in increasing order, for comparing sets lexicographically
/// as sorted sequences.
pub fn sorted(s: VertexSet) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().collect();
    v.sort_unstable();
    v
}

/// The lexicographically smallest set, among those of minimum size that
/// satisfy `keep`, by scanning all subsets.
pub fn brute_lex_min(g: &Graph, keep: impl Fn(VertexSet) -> bool, maximize: bool) -> Vec<usize> {
    let all: Vec<VertexSet> = (0..=full(g.order())).map(VertexSet::from_bits).filter(|&s| keep(s)).collect();
    let best = if maximize {
        all.iter().map(|s| s.len()).max().unwrap()
    } else {
        all.iter().map(|s| s.len()).min().unwrap()
    };
    all.into_iter().filter(|s| s.len() == best).map(sorted).min().unwrap()
}
