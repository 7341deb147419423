//! Recognizers for graphs in which every maximum matching is acyclic
//! (every component a tree or an odd cycle) or induced (every component a
//! star or a triangle). Linear time; no matching is ever computed.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Most specific label of a connected component. `Star` implies tree and
/// `Triangle` implies odd cycle; K1 and K2 are stars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentShape {
    Tree,
    OddCycle,
    Star,
    Triangle,
    Other,
}

impl ComponentShape {
    pub fn is_tree(self) -> bool {
        matches!(self, ComponentShape::Tree | ComponentShape::Star)
    }

    pub fn is_odd_cycle(self) -> bool {
        matches!(self, ComponentShape::OddCycle | ComponentShape::Triangle)
    }
}

/// Every component of `g` with its shape, ordered by smallest vertex.
pub fn component_shapes(g: &Graph) -> Vec<(Vec<usize>, ComponentShape)> {
    g.components()
        .into_iter()
        .map(|comp| {
            let order = comp.len();
            let degrees: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
            let size = degrees.iter().sum::<usize>() / 2;
            let shape = if size + 1 == order {
                if order <= 2 || degrees.iter().any(|&d| d + 1 == order) {
                    ComponentShape::Star
                } else {
                    ComponentShape::Tree
                }
            } else if size == order && order % 2 == 1 && degrees.iter().all(|&d| d == 2) {
                if order == 3 {
                    ComponentShape::Triangle
                } else {
                    ComponentShape::OddCycle
                }
            } else {
                ComponentShape::Other
            };
            (comp, shape)
        })
        .collect()
}

/// True iff every maximum matching of `g` is acyclic.
pub fn every_max_matching_acyclic(g: &Graph) -> bool {
    component_shapes(g)
        .iter()
        .all(|(_, s)| s.is_tree() || s.is_odd_cycle())
}

/// True iff every maximum matching of `g` is induced.
pub fn every_max_matching_induced(g: &Graph) -> bool {
    component_shapes(g)
        .iter()
        .all(|(_, s)| matches!(s, ComponentShape::Star | ComponentShape::Triangle))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acyclic_examples() {
        assert!(every_max_matching_acyclic(&Graph::cycle(5).disjoint_union(&Graph::path(3))));
        assert!(!every_max_matching_acyclic(&Graph::cycle(4)));
        assert!(every_max_matching_acyclic(&Graph::path(6).disjoint_union(&Graph::star(3))));
        assert!(every_max_matching_acyclic(&Graph::empty(0)));
    }

    #[test]
    fn induced_examples() {
        assert!(every_max_matching_induced(&Graph::star(5).disjoint_union(&Graph::complete(3))));
        assert!(!every_max_matching_induced(&Graph::path(4)));
        assert!(!every_max_matching_induced(&Graph::cycle(5)));
        assert!(every_max_matching_induced(&Graph::empty(3)));
    }

    #[test]
    fn shapes() {
        let g = Graph::star(3)
            .disjoint_union(&Graph::path(4))
            .disjoint_union(&Graph::cycle(3))
            .disjoint_union(&Graph::cycle(5))
            .disjoint_union(&Graph::complete(4));
        let shapes: Vec<ComponentShape> = component_shapes(&g).into_iter().map(|(_, s)| s).collect();
        use ComponentShape::*;
        assert_eq!(shapes, vec![Star, Tree, Triangle, OddCycle, Other]);
    }
}
