//! Canonical labelings by individualization and refinement.
//!
//! The ordered partition of the vertices is refined to an equitable one,
//! the first smallest non-singleton cell is individualized vertex by
//! vertex, and every discrete leaf yields a labeling. The canonical
//! labeling is the leaf whose relabeled upper triangle, read in graph6
//! bit order, is smallest; that is exactly the leaf with the smallest
//! graph6 token. Leaves with equal codes give automorphisms, which prune
//! sibling branches lying in the same orbit.

use std::collections::HashSet;

use crate::graph::{Graph, VertexSet};

/// Largest order the labeling search accepts internally (the code must fit
/// in 128 bits).
pub(crate) const LABELING_MAX_ORDER: usize = 16;

/// Canonical labeling of a graph.
#[derive(Debug, Clone)]
pub(crate) struct Labeling {
    /// Upper-triangle bits of the relabeled graph, first bit most significant.
    pub code: u128,
    /// `position[i]` is the vertex receiving canonical label `i`.
    pub position: Vec<usize>,
}

impl Labeling {
    /// Vertex receiving the last canonical label.
    pub fn last_vertex(&self) -> Option<usize> {
        self.position.last().copied()
    }

    /// The canonically relabeled graph.
    pub fn apply(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; g.order()];
        for (label, &v) in self.position.iter().enumerate() {
            perm[v] = label;
        }
        g.relabel(&perm)
    }
}

/// Code of `g` under the labeling `position` (label -> vertex).
pub(crate) fn code_of(g: &Graph, position: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..position.len() {
        let row = g.neighbors(position[j]);
        for &pi in &position[..j] {
            code = code << 1 | row.contains(pi) as u128;
        }
    }
    code
}

type Cells = Vec<Vec<usize>>;

/// Refines `cells` until every cell has a uniform neighbour count into
/// every other cell. Splits are ordered by ascending count.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter: VertexSet = cells[si].iter().copied().collect();
            let mut split_any = false;
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & splitter).len(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if next.last().map(Vec::len) != Some(cell.len()) {
                    split_any = true;
                }
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Cells, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let cell = cells[ti].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.same_orbit_as_explored(v, &explored, path) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            child.splice(ti..=ti, [vec![v], rest]);
            path.push(v);
            self.visit(child, path);
            path.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, position: Vec<usize>) {
        let code = code_of(self.g, &position);
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_pos)) if code == *best => {
                let mut auto = vec![0; position.len()];
                for (i, &v) in best_pos.iter().enumerate() {
                    auto[v] = position[i];
                }
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(auto);
                }
            }
            _ => self.best = Some((code, position)),
        }
    }

    /// True if an automorphism fixing `path` pointwise maps `v` into the
    /// orbit of an explored sibling.
    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        if explored.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<usize>> =
            self.automorphisms.iter().filter(|a| path.iter().all(|&p| a[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit: HashSet<usize> = HashSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for a in &gens {
                let y = a[x];
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        explored.iter().any(|e| orbit.contains(e))
    }
}

/// Canonical labeling of `g`. Panics above [`LABELING_MAX_ORDER`].
pub(crate) fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    assert!(n <= LABELING_MAX_ORDER, "canonical labeling supports order <= {LABELING_MAX_ORDER}");
    if n == 0 {
        return Labeling { code: 0, position: Vec::new() };
    }
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.visit(vec![(0..n).collect()], &mut Vec::new());
    let (code, position) = search.best.expect("at least one leaf");
    Labeling { code, position }
}
