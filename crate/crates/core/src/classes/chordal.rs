use crate::graph::{Graph, VertexSet};

/// Maximum cardinality search: repeatedly visit the unvisited vertex with
/// the most visited neighbours (lowest index on ties).
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(g.order());
    for _ in 0..g.order() {
        let v = (g.vertices() - visited)
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & visited).len(), std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
    }
    order
}

/// A perfect elimination ordering, if one exists.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let visit = maximum_cardinality_search(g);
    let mut before = VertexSet::EMPTY;
    for &v in &visit {
        if !g.is_clique(g.neighbors(v) & before) {
            return None;
        }
        before.insert(v);
    }
    Some(visit.into_iter().rev().collect())
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_peo(g: &Graph, order: &[usize]) -> bool {
        order.iter().enumerate().all(|(i, &v)| {
            let later: VertexSet = order[i + 1..].iter().copied().collect();
            g.is_clique(g.neighbors(v) & later)
        })
    }

    #[test]
    fn basic_cases() {
        assert!(is_chordal(&Graph::path(7).unwrap()));
        assert!(is_chordal(&Graph::complete(5).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(6).unwrap()));
        assert!(is_chordal(&Graph::cycle(3).unwrap()));
        assert!(is_chordal(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn returned_ordering_is_a_peo() {
        // Two triangles sharing an edge plus a pendant.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let peo = perfect_elimination_ordering(&g).unwrap();
        assert!(is_peo(&g, &peo));
    }

    #[test]
    fn cycle_with_chord() {
        let mut edges: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        edges.push((0, 2));
        assert!(!is_chordal(&Graph::from_edges(5, edges.clone()).unwrap()));
        edges.push((0, 3));
        assert!(is_chordal(&Graph::from_edges(5, edges).unwrap()));
    }
}
