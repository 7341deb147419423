//! Matchings, the four matching kinds, and their feasibility predicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::oracles::blossom;

/// A set of edges, kept sorted and deduplicated. Disjointness and membership
/// in a host graph are checked by [`Matching::validate`].
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges.iter()).finish()
    }
}

impl Matching {
    pub fn new<E: Into<Edge>>(edges: impl IntoIterator<Item = E>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Sorted list of matched vertices, V(M).
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        vs.sort_unstable();
        vs
    }

    /// Sum of the host-graph weights of the edges. Assumes a validated matching.
    pub fn weight_in(&self, g: &Graph) -> i64 {
        self.edges
            .iter()
            .map(|e| g.edge_weight(e.0, e.1).expect("matching edge in graph"))
            .sum()
    }

    /// `mate[v]` for every vertex of a graph of order `n`.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for e in &self.edges {
            mate[e.0] = Some(e.1);
            mate[e.1] = Some(e.0);
        }
        mate
    }

    /// Checks that the edges are pairwise disjoint edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.n()];
        for e in &self.edges {
            if !g.has_edge(e.0, e.1) {
                return Err(Error::InvalidMatching(format!("{e:?} is not an edge")));
            }
            for x in [e.0, e.1] {
                if used[x] {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {x} is covered twice"
                    )));
                }
                used[x] = true;
            }
        }
        Ok(())
    }

    /// Relabels every endpoint through `map` (e.g. from a subgraph back to
    /// its host).
    pub fn mapped(&self, map: &[usize]) -> Matching {
        Matching::new(self.edges.iter().map(|e| Edge::new(map[e.0], map[e.1])))
    }

    pub fn union(&self, other: &Matching) -> Matching {
        Matching::new(self.edges.iter().chain(other.edges.iter()).copied())
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        2 * self.len() == g.n() && self.validate(g).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingKind {
    Unrestricted,
    Induced,
    Acyclic,
    UniquelyRestricted,
}

impl MatchingKind {
    pub const ALL: [MatchingKind; 4] = [
        MatchingKind::Unrestricted,
        MatchingKind::Induced,
        MatchingKind::Acyclic,
        MatchingKind::UniquelyRestricted,
    ];

    /// Name used on the command line and in JSON output.
    pub fn cli_name(self) -> &'static str {
        match self {
            MatchingKind::Unrestricted => "matching",
            MatchingKind::Induced => "induced",
            MatchingKind::Acyclic => "acyclic",
            MatchingKind::UniquelyRestricted => "unique",
        }
    }
}

/// G(M) together with the map from its vertices back to the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedSubgraph {
    pub graph: Graph,
    /// `host[i]` is the host vertex behind subgraph vertex `i`; ascending.
    pub host: Vec<usize>,
    /// The matching itself, in subgraph ids. Always a perfect matching of `graph`.
    pub matching: Matching,
}

/// The subgraph of `g` induced by the vertices covered by `m`, relabelled to
/// `0..2|m|` in ascending host order.
pub fn matched_subgraph(g: &Graph, m: &Matching) -> Result<MatchedSubgraph> {
    m.validate(g)?;
    let host = m.vertices();
    let (graph, host) = g.induced_subgraph(&host);
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in host.iter().enumerate() {
        local[v] = i;
    }
    let matching = Matching::new(m.edges().iter().map(|e| Edge::new(local[e.0], local[e.1])));
    Ok(MatchedSubgraph {
        graph,
        host,
        matching,
    })
}

pub fn is_kind_matching(g: &Graph, m: &Matching, kind: MatchingKind) -> Result<bool> {
    let sub = matched_subgraph(g, m)?;
    Ok(match kind {
        MatchingKind::Unrestricted => true,
        MatchingKind::Induced => sub.graph.edge_count() == m.len(),
        MatchingKind::Acyclic => is_forest(&sub.graph),
        MatchingKind::UniquelyRestricted => find_alternating_edge(&sub.graph, &sub.matching).is_none(),
    })
}

pub(crate) fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// For a graph `h` with perfect matching `pm`, returns a non-matching edge
/// `uv` such that `h - u - v` still has a perfect matching, i.e. an edge on
/// a `pm`-alternating cycle. `None` means `pm` is the only perfect matching.
pub(crate) fn find_alternating_edge(h: &Graph, pm: &Matching) -> Option<Edge> {
    h.edges()
        .iter()
        .copied()
        .find(|&e| !pm.contains(e) && has_perfect_matching_without(h, e.0, e.1))
}

/// Same test restricted to non-matching edges incident with `u`.
pub(crate) fn alternating_edge_at(h: &Graph, pm: &Matching, u: usize) -> Option<Edge> {
    h.neighbors(u)
        .map(|v| Edge::new(u, v))
        .find(|&e| !pm.contains(e) && has_perfect_matching_without(h, e.0, e.1))
}

fn has_perfect_matching_without(h: &Graph, a: usize, b: usize) -> bool {
    let mut drop = vec![false; h.n()];
    drop[a] = true;
    drop[b] = true;
    let (rest, _) = h.without_vertices(&drop);
    2 * blossom::maximum_matching_size(&rest) == rest.n()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn matched_subgraph_of_c4_and_p4() {
        let m = Matching::new([(0, 1), (2, 3)]);
        let sub = matched_subgraph(&c4(), &m).unwrap();
        assert_eq!(sub.graph, c4());
        let sub = matched_subgraph(&Graph::path(4), &m).unwrap();
        assert_eq!(sub.graph, Graph::path(4));
        assert_eq!(sub.host, vec![0, 1, 2, 3]);
    }

    #[test]
    fn matched_subgraph_relabels() {
        let g = Graph::path(6);
        let m = Matching::new([(4, 5), (1, 2)]);
        let sub = matched_subgraph(&g, &m).unwrap();
        assert_eq!(sub.host, vec![1, 2, 4, 5]);
        assert_eq!(sub.graph.edges(), &[Edge(0, 1), Edge(2, 3)]);
        assert_eq!(sub.matching, Matching::new([(0, 1), (2, 3)]));
    }

    #[test]
    fn empty_matching_is_every_kind() {
        let sub = matched_subgraph(&Graph::complete(5), &Matching::empty()).unwrap();
        assert_eq!(sub.graph.n(), 0);
        for kind in MatchingKind::ALL {
            assert!(is_kind_matching(&Graph::complete(5), &Matching::empty(), kind).unwrap());
        }
    }

    #[test]
    fn kind_predicates_on_small_graphs() {
        let m = Matching::new([(0, 1), (2, 3)]);
        assert!(!is_kind_matching(&c4(), &m, MatchingKind::Acyclic).unwrap());
        assert!(!is_kind_matching(&c4(), &m, MatchingKind::UniquelyRestricted).unwrap());
        assert!(is_kind_matching(&Graph::path(4), &m, MatchingKind::UniquelyRestricted).unwrap());
        assert!(is_kind_matching(&Graph::path(4), &m, MatchingKind::Acyclic).unwrap());
        assert!(!is_kind_matching(&Graph::path(4), &m, MatchingKind::Induced).unwrap());
        assert!(is_kind_matching(&c4(), &m, MatchingKind::Unrestricted).unwrap());
    }

    #[test]
    fn invalid_matchings_are_rejected() {
        let g = Graph::path(4);
        let overlapping = Matching::new([(0, 1), (1, 2)]);
        let non_edge = Matching::new([(0, 3)]);
        for m in [overlapping, non_edge] {
            assert!(matches!(
                is_kind_matching(&g, &m, MatchingKind::Induced),
                Err(Error::InvalidMatching(_))
            ));
            assert!(matched_subgraph(&g, &m).is_err());
        }
    }

    #[test]
    fn triangle_with_pendant_is_ur_but_not_acyclic() {
        // 0-1-2 triangle, pendant 2-3: M = {01, 23} covers everything,
        // G(M) has a triangle but no alternating cycle.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let m = Matching::new([(0, 1), (2, 3)]);
        assert!(!is_kind_matching(&g, &m, MatchingKind::Acyclic).unwrap());
        assert!(is_kind_matching(&g, &m, MatchingKind::UniquelyRestricted).unwrap());
    }
}
