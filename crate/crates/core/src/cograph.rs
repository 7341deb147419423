//! Cotree decomposition and maximum-weight acyclic matching on P4-free
//! graphs.
//!
//! A P4-free graph on two or more vertices is disconnected or its
//! complement is. Splitting recursively into components (union nodes) and
//! complement components (join nodes) yields the cotree. An acyclic
//! matching of a join either lives inside one side or is a single edge
//! across, because two matching edges touching different sides always
//! span a 4-cycle. That makes the optimum a simple bottom-up recursion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{Matching, MatchingKind};
use crate::oracles::SolveResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CotreeNode {
    Leaf(usize),
    /// Children are the connected components. The empty graph is the only
    /// graph whose cotree is a union with fewer than two children.
    Union(Vec<CotreeNode>),
    /// Children are the components of the complement.
    Join(Vec<CotreeNode>),
}

impl CotreeNode {
    /// Leaves below this node, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            CotreeNode::Leaf(v) => out.push(*v),
            CotreeNode::Union(ch) | CotreeNode::Join(ch) => ch.iter().for_each(|c| c.collect(out)),
        }
    }

    /// The unit-weight graph on `n` vertices that this cotree describes.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.join_edges(&mut edges);
        Graph::from_edges(n, &edges).expect("cotree leaves are distinct")
    }

    fn join_edges(&self, edges: &mut Vec<(usize, usize)>) {
        match self {
            CotreeNode::Leaf(_) => {}
            CotreeNode::Union(ch) => ch.iter().for_each(|c| c.join_edges(edges)),
            CotreeNode::Join(ch) => {
                let sides: Vec<Vec<usize>> = ch.iter().map(CotreeNode::vertices).collect();
                for (i, a) in sides.iter().enumerate() {
                    for b in &sides[i + 1..] {
                        for &u in a {
                            for &v in b {
                                edges.push((u, v));
                            }
                        }
                    }
                }
                ch.iter().for_each(|c| c.join_edges(edges));
            }
        }
    }
}

/// Canonical cotree of `g`, or [`Error::NotCograph`] carrying an induced P4
/// `(a, b, c, d)` (path order, `a < d`).
pub fn build_cotree(g: &Graph) -> Result<CotreeNode> {
    let all: Vec<usize> = (0..g.n()).collect();
    if all.is_empty() {
        return Ok(CotreeNode::Union(Vec::new()));
    }
    let mut mask = vec![false; g.n()];
    decompose(g, &all, &mut mask)
}

fn decompose(g: &Graph, set: &[usize], mask: &mut [bool]) -> Result<CotreeNode> {
    if set.len() == 1 {
        return Ok(CotreeNode::Leaf(set[0]));
    }
    let parts = split(g, set, mask, false);
    if parts.len() > 1 {
        let children = parts
            .iter()
            .map(|p| decompose(g, p, mask))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CotreeNode::Union(children));
    }
    let parts = split(g, set, mask, true);
    if parts.len() > 1 {
        let children = parts
            .iter()
            .map(|p| decompose(g, p, mask))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CotreeNode::Join(children));
    }
    Err(Error::NotCograph {
        witness: find_p4(g, set).expect("graph and complement both connected implies an induced P4"),
    })
}

/// Components of `g[set]` (or of its complement), each ascending, ordered by
/// smallest vertex.
fn split(g: &Graph, set: &[usize], mask: &mut [bool], complement: bool) -> Vec<Vec<usize>> {
    for &v in set {
        mask[v] = true;
    }
    let mut assigned = vec![false; set.len()];
    let pos = |v: usize| set.binary_search(&v).unwrap();
    let mut parts = Vec::new();
    for start in 0..set.len() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut part = vec![set[start]];
        let mut stack = vec![set[start]];
        while let Some(u) = stack.pop() {
            if complement {
                for (j, &w) in set.iter().enumerate() {
                    if !assigned[j] && w != u && !g.has_edge(u, w) {
                        assigned[j] = true;
                        part.push(w);
                        stack.push(w);
                    }
                }
            } else {
                for w in g.neighbors(u) {
                    if mask[w] {
                        let j = pos(w);
                        if !assigned[j] {
                            assigned[j] = true;
                            part.push(w);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    for &v in set {
        mask[v] = false;
    }
    parts
}

/// Lexicographically smallest `(a, b, c, d)` inducing the path a-b-c-d
/// inside `set`, with `a < d`.
fn find_p4(g: &Graph, set: &[usize]) -> Option<[usize; 4]> {
    let mut best: Option<[usize; 4]> = None;
    for &b in set {
        for &c in set {
            if b == c || !g.has_edge(b, c) {
                continue;
            }
            for &a in set {
                if a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c) {
                    continue;
                }
                for &d in set {
                    if d == a || d == b || d == c || a > d {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        let cand = [a, b, c, d];
                        if best.map_or(true, |x| cand < x) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Maximum-weight acyclic matching of a P4-free graph.
///
/// Edges of weight `<= 0` are never used. Among optimal matchings the
/// lexicographically smallest edge list is returned.
pub fn mwam_p4free(g: &Graph) -> Result<SolveResult> {
    let tree = build_cotree(g)?;
    let (value, witness) = solve(g, &tree);
    Ok(SolveResult {
        value,
        witness,
        kind: MatchingKind::Acyclic,
    })
}

fn prefer(a: &(i64, Matching), b: &(i64, Matching)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

fn solve(g: &Graph, node: &CotreeNode) -> (i64, Matching) {
    match node {
        CotreeNode::Leaf(_) => (0, Matching::empty()),
        CotreeNode::Union(children) => children.iter().fold((0, Matching::empty()), |acc, c| {
            let (v, m) = solve(g, c);
            (acc.0 + v, acc.1.union(&m))
        }),
        CotreeNode::Join(children) => {
            let mut best = (0, Matching::empty());
            for c in children {
                let cand = solve(g, c);
                if prefer(&cand, &best) {
                    best = cand;
                }
            }
            let sides: Vec<Vec<usize>> = children.iter().map(CotreeNode::vertices).collect();
            for (i, a) in sides.iter().enumerate() {
                for b in &sides[i + 1..] {
                    for &u in a {
                        for &v in b {
                            let w = g.edge_weight(u, v).expect("join sides are adjacent");
                            if w > 0 {
                                let cand = (w, Matching::new([Edge::new(u, v)]));
                                if prefer(&cand, &best) {
                                    best = cand;
                                }
                            }
                        }
                    }
                }
            }
            debug_assert!(
                best.1.len() <= 1
                    || sides.iter().any(|s| best
                        .1
                        .vertices()
                        .iter()
                        .all(|v| s.binary_search(v).is_ok())),
                "join solution must stay in one child or be a single cross edge"
            );
            best
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CotreeNode::*;

    #[test]
    fn cotree_examples() {
        assert_eq!(
            build_cotree(&Graph::complete(2)).unwrap(),
            Join(vec![Leaf(0), Leaf(1)])
        );
        assert_eq!(
            build_cotree(&Graph::path(4)),
            Err(Error::NotCograph {
                witness: [0, 1, 2, 3]
            })
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            build_cotree(&two_k2).unwrap(),
            Union(vec![Join(vec![Leaf(0), Leaf(1)]), Join(vec![Leaf(2), Leaf(3)])])
        );
        assert_eq!(build_cotree(&Graph::empty(1)).unwrap(), Leaf(0));
    }

    #[test]
    fn complete_graphs_are_one_join() {
        let t = build_cotree(&Graph::complete(4)).unwrap();
        assert_eq!(t, Join((0..4).map(Leaf).collect()));
        assert_eq!(t.evaluate(4), Graph::complete(4));
    }

    #[test]
    fn p4_witness_in_a_larger_graph() {
        // C5 contains the induced path 0-1-2-3
        match build_cotree(&Graph::cycle(5)) {
            Err(Error::NotCograph { witness }) => assert_eq!(witness, [0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mwam_examples() {
        assert_eq!(mwam_p4free(&Graph::complete(4)).unwrap().value, 1);
        let two = Graph::from_weighted_edges(4, &[(0, 1, 3), (2, 3, 5)]).unwrap();
        let r = mwam_p4free(&two).unwrap();
        assert_eq!(r.value, 8);
        assert_eq!(r.witness, Matching::new([(0, 1), (2, 3)]));
        assert_eq!(mwam_p4free(&Graph::complete_bipartite(2, 2)).unwrap().value, 1);
        assert!(matches!(
            mwam_p4free(&Graph::path(4)),
            Err(Error::NotCograph { .. })
        ));
        assert_eq!(mwam_p4free(&Graph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn negative_cross_edges_are_skipped() {
        let g = Graph::complete(3).reweighted(|_, _| -2);
        let r = mwam_p4free(&g).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }
}
