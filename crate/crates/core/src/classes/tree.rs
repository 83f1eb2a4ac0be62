use serde::Serialize;

use super::ClassError;
use crate::graph::{Distance, Graph};
use crate::patterns::{first_induced, PatternName};
use crate::perfection::perfect_by_theorem;

/// Star / spider family membership, most specific first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TreeClass {
    Singleton,
    Star,
    Spider,
    WoundedSpider,
    /// `K_{1,k}`, `k >= 2`, with one edge subdivided twice.
    Broom3,
    Other,
}

impl TreeClass {
    /// True for every class other than [`TreeClass::Other`].
    pub fn is_perfect_family(self) -> bool {
        self != TreeClass::Other
    }
}

/// Lengths of the paths hanging off `center`, or `None` if some branch is
/// not a path.
fn legs(t: &Graph, center: usize) -> Option<Vec<usize>> {
    t.neighbors(center)
        .iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            loop {
                match t.degree(cur) {
                    1 => return Some(len),
                    2 => {
                        let next = t.neighbors(cur).without(prev).first().expect("degree two");
                        (prev, cur, len) = (cur, next, len + 1);
                    }
                    _ => return None,
                }
            }
        })
        .collect()
}

fn class_for_legs(legs: &[usize]) -> TreeClass {
    let k = legs.len();
    let count = |l: usize| legs.iter().filter(|&&x| x == l).count();
    if k >= 1 && count(1) == k {
        TreeClass::Star
    } else if k >= 1 && count(2) == k {
        TreeClass::Spider
    } else if k >= 1 && count(1) + count(2) == k && count(2) < k {
        TreeClass::WoundedSpider
    } else if k >= 2 && count(3) == 1 && count(1) == k - 1 {
        TreeClass::Broom3
    } else {
        TreeClass::Other
    }
}

/// Locates a center whose branches are paths and reads the class off the
/// branch lengths; the most specific class over all centers wins.
pub fn classify_tree(t: &Graph) -> Result<TreeClass, ClassError> {
    if !t.is_tree() {
        return Err(ClassError::NotATree);
    }
    if t.order() == 1 {
        return Ok(TreeClass::Singleton);
    }
    Ok((0..t.order())
        .filter_map(|c| legs(t, c))
        .map(|l| class_for_legs(&l))
        .min()
        .unwrap_or(TreeClass::Other))
}

/// The four equivalent conditions of the tree characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeConditions {
    /// Perfect, decided by forbidden subgraphs.
    pub perfect: bool,
    /// Free of `H1`, `H7`, `H8`.
    pub reduced_free: bool,
    /// Diameter at most 4 and at most one vertex of degree at least 3.
    pub diameter_degree: bool,
    /// `K1`, spider, wounded spider or broom with a handle of length 3.
    pub family: bool,
}

impl TreeConditions {
    pub fn agree(&self) -> bool {
        let v = [self.perfect, self.reduced_free, self.diameter_degree, self.family];
        v.iter().all(|&x| x == v[0])
    }
}

pub fn tree_corollary_conditions(t: &Graph) -> Result<TreeConditions, ClassError> {
    let class = classify_tree(t)?;
    let high_degree = (0..t.order()).filter(|&v| t.degree(v) >= 3).count();
    Ok(TreeConditions {
        perfect: perfect_by_theorem(t).perfect,
        reduced_free: first_induced(t, &[PatternName::H1, PatternName::H7, PatternName::H8]).is_none(),
        diameter_degree: t.diameter() <= Distance::Finite(4) && high_degree <= 1,
        family: class.is_perfect_family(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The star `K_{1,k}` with the listed legs subdivided `extra[i]` times.
    fn subdivided_star(extra: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &e in extra {
            let mut prev = 0;
            for _ in 0..=e {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(next, edges).unwrap()
    }

    #[test]
    fn family_examples() {
        assert_eq!(classify_tree(&Graph::star(4).unwrap()).unwrap(), TreeClass::Star);
        assert_eq!(classify_tree(&subdivided_star(&[1, 1, 1, 1])).unwrap(), TreeClass::Spider);
        assert_eq!(classify_tree(&subdivided_star(&[1, 1, 0, 0])).unwrap(), TreeClass::WoundedSpider);
        // Broom: five edges at the center, one subdivided twice.
        let broom = subdivided_star(&[2, 0, 0, 0, 0]);
        assert_eq!(broom.order(), 8);
        assert_eq!(classify_tree(&broom).unwrap(), TreeClass::Broom3);
        assert_eq!(tree_corollary_conditions(&broom).unwrap(), TreeConditions {
            perfect: true,
            reduced_free: true,
            diameter_degree: true,
            family: true
        });
        let k14_broom = subdivided_star(&[2, 0, 0, 0]);
        assert_eq!(classify_tree(&k14_broom).unwrap(), TreeClass::Broom3);
        assert!(tree_corollary_conditions(&k14_broom).unwrap().perfect);
    }

    #[test]
    fn paths() {
        let class = |n| classify_tree(&Graph::path(n).unwrap()).unwrap();
        assert_eq!(class(1), TreeClass::Singleton);
        assert_eq!(class(2), TreeClass::Star);
        assert_eq!(class(3), TreeClass::Star);
        assert_eq!(class(4), TreeClass::WoundedSpider);
        assert_eq!(class(5), TreeClass::Spider);
        assert_eq!(class(6), TreeClass::Other);
    }

    #[test]
    fn corollary_conditions() {
        let all_false = TreeConditions { perfect: false, reduced_free: false, diameter_degree: false, family: false };
        assert_eq!(tree_corollary_conditions(&Graph::path(6).unwrap()).unwrap(), all_false);
        let k1 = tree_corollary_conditions(&Graph::empty(1).unwrap()).unwrap();
        assert!(k1.agree() && k1.perfect);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(classify_tree(&Graph::cycle(4).unwrap()), Err(ClassError::NotATree));
        assert!(tree_corollary_conditions(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn broom_needs_two_short_legs() {
        // Legs (3, 1) form P5, a spider; legs (3, 1, 1) a broom; (3, 2) is P6.
        assert_eq!(classify_tree(&subdivided_star(&[2, 0])).unwrap(), TreeClass::Spider);
        assert_eq!(classify_tree(&subdivided_star(&[2, 0, 0])).unwrap(), TreeClass::Broom3);
        assert_eq!(classify_tree(&subdivided_star(&[2, 1, 0])).unwrap(), TreeClass::Other);
    }
}
