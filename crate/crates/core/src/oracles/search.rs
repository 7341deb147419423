//! Branch and bound over edges for maximum (weight) restricted matchings.
//!
//! Edges are decided in ascending id order, include branch first. All four
//! kinds are hereditary, so an edge that is infeasible now stays infeasible
//! deeper in the tree and the search only ever extends feasible matchings.
//! Because the include branch is explored first and only strictly better
//! solutions replace the incumbent, the reported witness is the
//! lexicographically smallest optimum.

use crate::dsu::RollbackDsu;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{alternating_edge_at, Matching, MatchingKind};
use crate::oracles::{blossom, Limits, SolveResult};

pub fn max_restricted_matching(g: &Graph, kind: MatchingKind, weighted: bool) -> Result<SolveResult> {
    max_restricted_matching_with(g, kind, weighted, &Limits::default())
}

/// As [`max_restricted_matching`] with explicit guards.
///
/// In weighted mode edges of weight `<= 0` are discarded up front: dropping
/// them from a feasible matching keeps it feasible and never loses weight.
pub fn max_restricted_matching_with(
    g: &Graph,
    kind: MatchingKind,
    weighted: bool,
    limits: &Limits,
) -> Result<SolveResult> {
    if g.n() > limits.restricted_max_vertices {
        return Err(Error::SizeGuard {
            what: "restricted matching search",
            actual: g.n(),
            limit: limits.restricted_max_vertices,
        });
    }
    let edges: Vec<(Edge, i64)> = if weighted {
        g.weighted_edges().filter(|&(_, w)| w > 0).collect()
    } else {
        g.edges().iter().map(|&e| (e, 1)).collect()
    };
    let mut search = Search::new(g, kind, edges);
    search.dfs(0);
    let witness = Matching::new(search.best.iter().map(|&i| search.edges[i].0));
    debug_assert!(crate::matching::is_kind_matching(g, &witness, kind).unwrap());
    Ok(SolveResult {
        value: search.best_value,
        witness,
        kind,
    })
}

/// Calls `visit` once for every matching of `kind` in `g` (including the
/// empty one), in the order of the include-first search.
pub fn for_each_restricted_matching(
    g: &Graph,
    kind: MatchingKind,
    limits: &Limits,
    mut visit: impl FnMut(&Matching),
) -> Result<()> {
    if g.n() > limits.enumeration_max_vertices {
        return Err(Error::SizeGuard {
            what: "restricted matching enumeration",
            actual: g.n(),
            limit: limits.enumeration_max_vertices,
        });
    }
    let edges = g.edges().iter().map(|&e| (e, 1)).collect();
    let mut search = Search::new(g, kind, edges);
    search.walk(0, &mut |chosen, edges| {
        visit(&Matching::new(chosen.iter().map(|&i| edges[i].0)))
    });
    Ok(())
}

struct Search<'a> {
    g: &'a Graph,
    kind: MatchingKind,
    edges: Vec<(Edge, i64)>,
    matched: Vec<bool>,
    // induced: number of matched neighbours per vertex
    touching: Vec<u32>,
    // acyclic: components of G(M)
    forest: RollbackDsu,
    checkpoints: Vec<usize>,
    chosen: Vec<usize>,
    current: i64,
    best: Vec<usize>,
    best_value: i64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, kind: MatchingKind, edges: Vec<(Edge, i64)>) -> Self {
        Search {
            g,
            kind,
            edges,
            matched: vec![false; g.n()],
            touching: vec![0; g.n()],
            forest: RollbackDsu::new(g.n()),
            checkpoints: Vec::new(),
            chosen: Vec::new(),
            current: 0,
            best: Vec::new(),
            best_value: 0,
        }
    }

    fn dfs(&mut self, i: usize) {
        if self.current > self.best_value {
            self.best_value = self.current;
            self.best = self.chosen.clone();
        }
        if i == self.edges.len() {
            return;
        }
        if self.current + self.bound(i) <= self.best_value {
            return;
        }
        let (e, _) = self.edges[i];
        if self.can_add(e) {
            self.push(i);
            if self.still_feasible(e) {
                self.dfs(i + 1);
            }
            self.pop(i);
        }
        self.dfs(i + 1);
    }

    fn walk(&mut self, i: usize, visit: &mut dyn FnMut(&[usize], &[(Edge, i64)])) {
        if i == self.edges.len() {
            visit(&self.chosen, &self.edges);
            return;
        }
        let (e, _) = self.edges[i];
        if self.can_add(e) {
            self.push(i);
            if self.still_feasible(e) {
                self.walk(i + 1, visit);
            }
            self.pop(i);
        }
        self.walk(i + 1, visit);
    }

    /// Necessary condition for `M + e` to be feasible. Exact for every kind
    /// except uniquely restricted, which is finished by `still_feasible`.
    fn can_add(&self, e: Edge) -> bool {
        let (u, v) = (e.0, e.1);
        if self.matched[u] || self.matched[v] {
            return false;
        }
        match self.kind {
            MatchingKind::Unrestricted | MatchingKind::UniquelyRestricted => true,
            MatchingKind::Induced => self.touching[u] == 0 && self.touching[v] == 0,
            MatchingKind::Acyclic => {
                // u and v form one new tree; every matched neighbour must
                // attach it to a distinct existing tree.
                let mut roots: Vec<usize> = Vec::new();
                for x in [u, v] {
                    for a in self.g.neighbors(x) {
                        if self.matched[a] {
                            let r = self.forest.find(a);
                            if roots.contains(&r) {
                                return false;
                            }
                            roots.push(r);
                        }
                    }
                }
                true
            }
        }
    }

    fn still_feasible(&self, e: Edge) -> bool {
        if self.kind != MatchingKind::UniquelyRestricted {
            return true;
        }
        // Any new alternating cycle passes through the new matching edge,
        // hence through a non-matching edge at e.0.
        let vertices: Vec<usize> = (0..self.g.n()).filter(|&v| self.matched[v]).collect();
        let (h, host) = self.g.induced_subgraph(&vertices);
        let mut local = vec![usize::MAX; self.g.n()];
        for (i, &v) in host.iter().enumerate() {
            local[v] = i;
        }
        let pm = Matching::new(
            self.chosen
                .iter()
                .map(|&i| self.edges[i].0)
                .map(|f| Edge::new(local[f.0], local[f.1])),
        );
        alternating_edge_at(&h, &pm, local[e.0]).is_none()
    }

    fn push(&mut self, i: usize) {
        let (e, w) = self.edges[i];
        let (u, v) = (e.0, e.1);
        match self.kind {
            MatchingKind::Induced => {
                for x in [u, v] {
                    for a in self.g.neighbors(x) {
                        self.touching[a] += 1;
                    }
                }
            }
            MatchingKind::Acyclic => {
                self.checkpoints.push(self.forest.checkpoint());
                self.forest.union(u, v);
                for x in [u, v] {
                    for a in self.g.neighbors(x) {
                        if self.matched[a] {
                            let merged = self.forest.union(x, a);
                            debug_assert!(merged);
                        }
                    }
                }
            }
            _ => {}
        }
        self.matched[u] = true;
        self.matched[v] = true;
        self.chosen.push(i);
        self.current += w;
    }

    fn pop(&mut self, i: usize) {
        let (e, w) = self.edges[i];
        let (u, v) = (e.0, e.1);
        self.current -= w;
        self.chosen.pop();
        self.matched[u] = false;
        self.matched[v] = false;
        match self.kind {
            MatchingKind::Induced => {
                for x in [u, v] {
                    for a in self.g.neighbors(x) {
                        self.touching[a] -= 1;
                    }
                }
            }
            MatchingKind::Acyclic => {
                let cp = self.checkpoints.pop().unwrap();
                self.forest.rollback(cp);
            }
            _ => {}
        }
    }

    /// Upper bound on what edges `i..` can still add.
    fn bound(&self, i: usize) -> i64 {
        let n = self.g.n();
        let mut best_at = vec![0i64; n];
        let mut open: Vec<(Edge, i64)> = Vec::new();
        for &(e, w) in &self.edges[i..] {
            if self.can_add(e) {
                open.push((e, w));
                best_at[e.0] = best_at[e.0].max(w);
                best_at[e.1] = best_at[e.1].max(w);
            }
        }
        if open.is_empty() {
            return 0;
        }
        let touched = best_at.iter().filter(|&&w| w > 0).count();
        let half_sum = best_at.iter().sum::<i64>() / 2;
        let cheap = |k: usize| -> i64 {
            let mut ws: Vec<i64> = open.iter().map(|&(_, w)| w).collect();
            ws.sort_unstable_by(|a, b| b.cmp(a));
            ws.iter().take(k).sum::<i64>().min(half_sum)
        };
        let bound = cheap(touched / 2);
        if self.current + bound <= self.best_value {
            return bound;
        }
        // tighten with the true matching number of the open edges
        let mut ids = vec![usize::MAX; n];
        let mut count = 0;
        for &(e, _) in &open {
            for x in [e.0, e.1] {
                if ids[x] == usize::MAX {
                    ids[x] = count;
                    count += 1;
                }
            }
        }
        let local: Vec<(usize, usize)> = open.iter().map(|&(e, _)| (ids[e.0], ids[e.1])).collect();
        let h = Graph::from_edges(count, &local).expect("subgraph of a simple graph");
        cheap(blossom::maximum_matching_size(&h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_kind_matching;

    fn value(g: &Graph, kind: MatchingKind) -> i64 {
        max_restricted_matching(g, kind, false).unwrap().value
    }

    #[test]
    fn spec_examples() {
        assert_eq!(value(&Graph::complete(4), MatchingKind::Acyclic), 1);
        assert_eq!(value(&Graph::cycle(6), MatchingKind::Induced), 2);
        assert_eq!(value(&Graph::path(4), MatchingKind::Induced), 1);
        assert_eq!(value(&Graph::path(4), MatchingKind::Acyclic), 2);
    }

    #[test]
    fn all_negative_weights_give_empty() {
        let g = Graph::complete(5).reweighted(|_, _| -5);
        for kind in MatchingKind::ALL {
            let r = max_restricted_matching(&g, kind, true).unwrap();
            assert_eq!(r.value, 0);
            assert!(r.witness.is_empty());
        }
    }

    #[test]
    fn lexicographically_smallest_witness() {
        let r = max_restricted_matching(&Graph::cycle(4), MatchingKind::Unrestricted, false).unwrap();
        assert_eq!(r.witness, Matching::new([(0, 1), (2, 3)]));
        let r = max_restricted_matching(&Graph::complete(4), MatchingKind::Acyclic, false).unwrap();
        assert_eq!(r.witness, Matching::new([(0, 1)]));
    }

    #[test]
    fn weighted_prefers_heavy_edges() {
        // P4 with a heavy middle edge: the acyclic optimum is {ab, cd} = 2
        // unless the middle edge outweighs both ends.
        let g = Graph::from_weighted_edges(4, &[(0, 1, 1), (1, 2, 5), (2, 3, 1)]).unwrap();
        let r = max_restricted_matching(&g, MatchingKind::Acyclic, true).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.witness, Matching::new([(1, 2)]));
        assert!(is_kind_matching(&g, &r.witness, MatchingKind::Acyclic).unwrap());
    }

    #[test]
    fn enumerates_every_restricted_matching() {
        // C4 has 7 matchings; the two perfect ones are neither acyclic nor
        // uniquely restricted, and only the empty and single-edge ones are induced
        let count = |kind| {
            let mut k = 0;
            for_each_restricted_matching(&Graph::cycle(4), kind, &Limits::default(), |m| {
                assert!(crate::matching::is_kind_matching(&Graph::cycle(4), m, kind).unwrap());
                k += 1;
            })
            .unwrap();
            k
        };
        assert_eq!(count(MatchingKind::Unrestricted), 7);
        assert_eq!(count(MatchingKind::Acyclic), 5);
        assert_eq!(count(MatchingKind::UniquelyRestricted), 5);
        assert_eq!(count(MatchingKind::Induced), 5);
    }

    #[test]
    fn size_guard_is_an_error() {
        let g = Graph::path(17);
        assert!(matches!(
            max_restricted_matching(&g, MatchingKind::Induced, false),
            Err(Error::SizeGuard { .. })
        ));
        let relaxed = Limits {
            restricted_max_vertices: 40,
            ..Limits::default()
        };
        let r = max_restricted_matching_with(&g, MatchingKind::Induced, false, &relaxed).unwrap();
        assert_eq!(r.value, 6);
    }
}
