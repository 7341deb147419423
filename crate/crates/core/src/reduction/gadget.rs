//! The 32-vertex variable gadget.
//!
//! Vertex layout inside gadget `i` (ids `32 i ..= 32 i + 31`):
//!
//! | offset  | role        |
//! |---------|-------------|
//! | 0..4    | u(i,1..4)   |
//! | 4..8    | t(i,1..4)   |
//! | 8..16   | y(i,1..8)   |
//! | 16..24  | z(i,1..8)   |
//! | 24..26  | x(i,1..2)   |
//! | 26..28  | w(i,1..2)   |
//! | 28..32  | f(i,1..4)   |

use std::fmt;

use serde::{Deserialize, Serialize};

pub const GADGET_ORDER: usize = 32;
pub const GADGET_SIZE: usize = 38;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GadgetRole {
    U,
    T,
    Y,
    Z,
    X,
    W,
    F,
}

impl GadgetRole {
    fn base_and_count(self) -> (usize, usize) {
        match self {
            GadgetRole::U => (0, 4),
            GadgetRole::T => (4, 4),
            GadgetRole::Y => (8, 8),
            GadgetRole::Z => (16, 8),
            GadgetRole::X => (24, 2),
            GadgetRole::W => (26, 2),
            GadgetRole::F => (28, 4),
        }
    }

    fn letter(self) -> char {
        match self {
            GadgetRole::U => 'u',
            GadgetRole::T => 't',
            GadgetRole::Y => 'y',
            GadgetRole::Z => 'z',
            GadgetRole::X => 'x',
            GadgetRole::W => 'w',
            GadgetRole::F => 'f',
        }
    }

    const ALL: [GadgetRole; 7] = [
        GadgetRole::U,
        GadgetRole::T,
        GadgetRole::Y,
        GadgetRole::Z,
        GadgetRole::X,
        GadgetRole::W,
        GadgetRole::F,
    ];
}

/// A gadget vertex: `role(var + 1, index)` in the usual 1-based notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GadgetVertex {
    pub var: usize,
    pub role: GadgetRole,
    /// 1-based index within the role.
    pub index: usize,
}

impl GadgetVertex {
    pub fn new(var: usize, role: GadgetRole, index: usize) -> Self {
        let (_, count) = role.base_and_count();
        assert!((1..=count).contains(&index), "{role:?} index {index} out of range");
        GadgetVertex { var, role, index }
    }

    /// Offset inside the gadget, `0..32`.
    pub fn offset(self) -> usize {
        self.role.base_and_count().0 + self.index - 1
    }

    pub fn id(self) -> usize {
        GADGET_ORDER * self.var + self.offset()
    }

    pub fn from_offset(var: usize, offset: usize) -> Self {
        for role in GadgetRole::ALL {
            let (base, count) = role.base_and_count();
            if (base..base + count).contains(&offset) {
                return GadgetVertex {
                    var,
                    role,
                    index: offset - base + 1,
                };
            }
        }
        panic!("gadget offset {offset} out of range");
    }
}

impl fmt::Display for GadgetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.role.letter(), self.var + 1, self.index)
    }
}

impl fmt::Debug for GadgetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The 38 edges of gadget `var`.
pub fn build_gadget(var: usize) -> Vec<(GadgetVertex, GadgetVertex)> {
    use GadgetRole::*;
    let v = |role, index| GadgetVertex::new(var, role, index);
    let mut edges = Vec::with_capacity(GADGET_SIZE);
    for j in 1..=8 {
        edges.push((v(Y, j), v(Z, j)));
    }
    for j in 1..=4 {
        edges.push((v(U, j), v(T, j)));
        edges.push((v(U, j), v(F, j)));
    }
    edges.extend([
        (v(W, 1), v(U, 1)),
        (v(W, 1), v(U, 2)),
        (v(W, 2), v(U, 3)),
        (v(W, 2), v(U, 4)),
        (v(X, 1), v(W, 1)),
        (v(X, 2), v(W, 2)),
    ]);
    // each y(i,j), j <= 8, meets one t and one f
    let ties: [(usize, (GadgetRole, usize), (GadgetRole, usize)); 8] = [
        (1, (T, 1), (F, 2)),
        (5, (T, 2), (F, 3)),
        (3, (T, 3), (F, 4)),
        (7, (T, 1), (F, 4)),
        (2, (F, 1), (T, 2)),
        (6, (F, 2), (T, 3)),
        (4, (F, 3), (T, 4)),
        (8, (F, 1), (T, 4)),
    ];
    for (j, a, b) in ties {
        edges.push((v(Y, j), v(a.0, a.1)));
        edges.push((v(Y, j), v(b.0, b.1)));
    }
    debug_assert_eq!(edges.len(), GADGET_SIZE);
    edges
}

/// The three cycles that force a gadget's matched vertices to avoid either
/// all of t(i,·) or all of f(i,·), as vertex sequences (closing edge
/// implied).
pub fn forcing_cycles(var: usize) -> [Vec<GadgetVertex>; 3] {
    use GadgetRole::*;
    let v = |role, index| GadgetVertex::new(var, role, index);
    [
        vec![v(U, 1), v(T, 1), v(Y, 1), v(F, 2), v(U, 2), v(W, 1)],
        vec![
            v(U, 2),
            v(T, 2),
            v(Y, 5),
            v(F, 3),
            v(U, 3),
            v(W, 2),
            v(U, 4),
            v(F, 4),
            v(Y, 7),
            v(T, 1),
            v(U, 1),
            v(W, 1),
        ],
        vec![v(F, 1), v(Y, 2), v(T, 2), v(U, 2), v(W, 1), v(U, 1)],
    ]
}

/// The vertices of degree one inside a gadget: z(i,1..8), x(i,1), x(i,2).
pub fn endvertices(var: usize) -> Vec<GadgetVertex> {
    let mut out: Vec<GadgetVertex> = (1..=8).map(|j| GadgetVertex::new(var, GadgetRole::Z, j)).collect();
    out.extend((1..=2).map(|j| GadgetVertex::new(var, GadgetRole::X, j)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn gadget_graph() -> Graph {
        let edges: Vec<(usize, usize)> = build_gadget(0).iter().map(|(a, b)| (a.id(), b.id())).collect();
        Graph::from_edges(GADGET_ORDER, &edges).unwrap()
    }

    #[test]
    fn counts_and_degrees() {
        let g = gadget_graph();
        assert_eq!(g.edge_count(), 38);
        let leaves: Vec<usize> = (0..32).filter(|&v| g.degree(v) == 1).collect();
        let mut expected: Vec<usize> = endvertices(0).iter().map(|v| v.id()).collect();
        expected.sort_unstable();
        assert_eq!(leaves, expected);
        assert!(g.max_degree() <= 3);
        assert!(g.is_connected());
    }

    #[test]
    fn forcing_cycles_are_present() {
        let g = gadget_graph();
        for cycle in forcing_cycles(0) {
            for k in 0..cycle.len() {
                let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
                assert!(g.has_edge(a.id(), b.id()), "{a}-{b} missing");
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for off in 0..32 {
            assert_eq!(GadgetVertex::from_offset(3, off).id(), 96 + off);
        }
        assert_eq!(GadgetVertex::new(1, GadgetRole::F, 4).to_string(), "f(2,4)");
    }
}
