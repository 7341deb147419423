//! Maximum-weight acyclic matching on 2P3-free graphs.
//!
//! If `M` is acyclic in a 2P3-free graph, G(M) is a disjoint union of K2s
//! and at most one larger tree, which is a P4 or one of three spider shapes
//! (see [`ShapeClass`]). The optimum is therefore the best of five candidate
//! families. Each family fixes a few seed vertices of the large tree and
//! completes the matching with a maximum-weight induced matching of what is
//! left after deleting the seed's closed neighbourhood. Where the tree may
//! still grow (extra pendant edges on a hub), the hub neighbourhood stays in
//! the residual graph but edges inside it are reweighted to `-1`, so every
//! residual edge picks up at most one hub neighbour.

mod mwim;
mod shape;

use serde::{Deserialize, Serialize};

pub use mwim::{mwim, ExactBackend, InducedMatchingBackend};
pub use shape::{classify_component, ShapeClass};

use crate::classes::find_induced_2p3;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{is_kind_matching, Matching, MatchingKind};
use crate::oracles::SolveResult;

/// The candidate family an optimum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CandidateType {
    /// Plain induced matching.
    Type1Induced,
    /// Large component is a P4.
    Type2P4,
    /// Large component is a spider with one hub.
    Type3,
    /// Double spider whose hubs are matched to each other.
    Type4,
    /// Double spider whose hubs are joined by a non-matching edge.
    Type5,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateStats {
    /// Seeds that passed the adjacency pre-filter, per type 2..=5.
    pub seeds: [usize; 4],
    /// Assembled candidates rejected by the acyclicity re-check.
    pub discarded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoP3Outcome {
    pub result: SolveResult,
    pub source: CandidateType,
    pub stats: CandidateStats,
}

/// Maximum-weight acyclic matching of a 2P3-free graph with the exact
/// induced-matching backend.
pub fn mwam_2p3free(g: &Graph) -> Result<SolveResult> {
    TwoP3Solver::new(ExactBackend::default())
        .solve(g)
        .map(|o| o.result)
}

pub struct TwoP3Solver<B> {
    backend: B,
}

impl<B: InducedMatchingBackend> TwoP3Solver<B> {
    pub fn new(backend: B) -> Self {
        TwoP3Solver { backend }
    }

    pub fn solve(&self, g: &Graph) -> Result<TwoP3Outcome> {
        if let Some(witness) = find_induced_2p3(g) {
            return Err(Error::Not2P3Free { witness });
        }
        let first = self.backend.max_weight_induced_matching(g)?;
        let mut run = Run {
            g,
            backend: &self.backend,
            best: SolveResult {
                kind: MatchingKind::Acyclic,
                ..first
            },
            source: CandidateType::Type1Induced,
            stats: CandidateStats::default(),
        };
        run.type2()?;
        run.type3()?;
        run.type4()?;
        run.type5()?;
        Ok(TwoP3Outcome {
            result: run.best,
            source: run.source,
            stats: run.stats,
        })
    }
}

struct Run<'a, B> {
    g: &'a Graph,
    backend: &'a B,
    best: SolveResult,
    source: CandidateType,
    stats: CandidateStats,
}

impl<B: InducedMatchingBackend> Run<'_, B> {
    fn positive(&self, u: usize, v: usize) -> bool {
        self.g.edge_weight(u, v).is_some_and(|w| w > 0)
    }

    /// Seed vertices must induce exactly `edges` (pairs of seed indices).
    fn induces_exactly(&self, seed: &[usize], edges: &[(usize, usize)]) -> bool {
        for i in 0..seed.len() {
            for j in i + 1..seed.len() {
                if seed[i] == seed[j] {
                    return false;
                }
                let wanted = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
                if self.g.has_edge(seed[i], seed[j]) != wanted {
                    return false;
                }
            }
        }
        true
    }

    fn closed_nbhd(&self, of: &[usize], mask: &mut [bool]) {
        for &v in of {
            mask[v] = true;
            for w in self.g.neighbors(v) {
                mask[w] = true;
            }
        }
    }

    fn open_nbhd(&self, v: usize) -> Vec<bool> {
        let mut mask = vec![false; self.g.n()];
        for w in self.g.neighbors(v) {
            mask[w] = true;
        }
        mask
    }

    /// Seed edges plus a best induced matching of `g - removed`, where edges
    /// with both ends in `hub` cost -1.
    fn evaluate(
        &mut self,
        kind: CandidateType,
        seed: &[Edge],
        removed: &[bool],
        hub: Option<&[bool]>,
    ) -> Result<()> {
        let (mut rest, host) = self.g.without_vertices(removed);
        if let Some(hub) = hub {
            rest = rest.reweighted(|e, w| if hub[host[e.0]] && hub[host[e.1]] { -1 } else { w });
        }
        let part = self.backend.max_weight_induced_matching(&rest)?;
        if let Some(hub) = hub {
            debug_assert!(part
                .witness
                .edges()
                .iter()
                .all(|e| !(hub[host[e.0]] && hub[host[e.1]])));
        }
        let m = Matching::new(seed.iter().copied()).union(&part.witness.mapped(&host));
        if m.validate(self.g).is_err() || !is_kind_matching(self.g, &m, MatchingKind::Acyclic)? {
            self.stats.discarded += 1;
            return Ok(());
        }
        let cand = SolveResult {
            value: m.weight_in(self.g),
            witness: m,
            kind: MatchingKind::Acyclic,
        };
        if cand.better_than(&self.best) {
            self.best = cand;
            self.source = kind;
        }
        Ok(())
    }

    /// Induced P4 a-b-c-d (a < d), matching {ab, cd}.
    fn type2(&mut self) -> Result<()> {
        let g = self.g;
        for b in 0..g.n() {
            for c in g.neighbors(b) {
                for a in g.neighbors(b) {
                    for d in g.neighbors(c) {
                        if a >= d || !self.positive(a, b) || !self.positive(c, d) {
                            continue;
                        }
                        if !self.induces_exactly(&[a, b, c, d], &[(0, 1), (1, 2), (2, 3)]) {
                            continue;
                        }
                        self.stats.seeds[0] += 1;
                        let mut removed = vec![false; g.n()];
                        self.closed_nbhd(&[a, b, c, d], &mut removed);
                        self.evaluate(
                            CandidateType::Type2P4,
                            &[Edge::new(a, b), Edge::new(c, d)],
                            &removed,
                            None,
                        )?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Hub x matched to leaf x', two legs x-y1-y1', x-y2-y2' (y1 < y2).
    fn type3(&mut self) -> Result<()> {
        let g = self.g;
        for x in 0..g.n() {
            for xp in g.neighbors(x) {
                if !self.positive(x, xp) {
                    continue;
                }
                for y1 in g.neighbors(x) {
                    for y2 in g.neighbors(x).filter(|&y2| y2 > y1) {
                        for y1p in g.neighbors(y1) {
                            if !self.positive(y1, y1p) {
                                continue;
                            }
                            for y2p in g.neighbors(y2) {
                                if !self.positive(y2, y2p) {
                                    continue;
                                }
                                let seed = [x, xp, y1, y1p, y2, y2p];
                                if !self.induces_exactly(&seed, &[(0, 1), (2, 3), (4, 5), (0, 2), (0, 4)]) {
                                    continue;
                                }
                                self.stats.seeds[1] += 1;
                                let mut removed = vec![false; g.n()];
                                self.closed_nbhd(&[xp, y1, y1p, y2, y2p], &mut removed);
                                let hub = self.open_nbhd(x);
                                self.evaluate(
                                    CandidateType::Type3,
                                    &[Edge::new(x, xp), Edge::new(y1, y1p), Edge::new(y2, y2p)],
                                    &removed,
                                    Some(&hub),
                                )?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Matched hubs x < x', leg x-y1-y1' and leg x'-z1-z1'.
    fn type4(&mut self) -> Result<()> {
        let g = self.g;
        for x in 0..g.n() {
            for xp in g.neighbors(x).filter(|&xp| xp > x) {
                if !self.positive(x, xp) {
                    continue;
                }
                for y1 in g.neighbors(x) {
                    for z1 in g.neighbors(xp) {
                        for y1p in g.neighbors(y1) {
                            if !self.positive(y1, y1p) {
                                continue;
                            }
                            for z1p in g.neighbors(z1) {
                                if !self.positive(z1, z1p) {
                                    continue;
                                }
                                let seed = [x, xp, y1, y1p, z1, z1p];
                                if !self.induces_exactly(&seed, &[(0, 1), (2, 3), (4, 5), (0, 2), (1, 4)]) {
                                    continue;
                                }
                                self.stats.seeds[2] += 1;
                                let mut removed = vec![false; g.n()];
                                self.closed_nbhd(&[y1, y1p, z1, z1p], &mut removed);
                                let (nx, nxp) = (self.open_nbhd(x), self.open_nbhd(xp));
                                let mut hub = vec![false; g.n()];
                                for v in 0..g.n() {
                                    removed[v] |= nx[v] && nxp[v];
                                    hub[v] = nx[v] || nxp[v];
                                }
                                self.evaluate(
                                    CandidateType::Type4,
                                    &[Edge::new(x, xp), Edge::new(y1, y1p), Edge::new(z1, z1p)],
                                    &removed,
                                    Some(&hub),
                                )?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Hubs x < y joined by a non-matching edge, matched to leaves x', y',
    /// leg x-w1-w1' and leg y-z1-z1'.
    fn type5(&mut self) -> Result<()> {
        let g = self.g;
        for x in 0..g.n() {
            for y in g.neighbors(x).filter(|&y| y > x) {
                for xp in g.neighbors(x) {
                    if !self.positive(x, xp) {
                        continue;
                    }
                    for yp in g.neighbors(y) {
                        if !self.positive(y, yp) {
                            continue;
                        }
                        if !self.induces_exactly(&[x, xp, y, yp], &[(0, 1), (2, 3), (0, 2)]) {
                            continue;
                        }
                        for w1 in g.neighbors(x) {
                            for z1 in g.neighbors(y) {
                                for w1p in g.neighbors(w1) {
                                    if !self.positive(w1, w1p) {
                                        continue;
                                    }
                                    for z1p in g.neighbors(z1) {
                                        if !self.positive(z1, z1p) {
                                            continue;
                                        }
                                        let seed = [x, xp, y, yp, w1, w1p, z1, z1p];
                                        let shape =
                                            [(0, 1), (2, 3), (0, 2), (4, 5), (6, 7), (0, 4), (2, 6)];
                                        if !self.induces_exactly(&seed, &shape) {
                                            continue;
                                        }
                                        self.stats.seeds[3] += 1;
                                        let mut removed = vec![false; g.n()];
                                        self.closed_nbhd(&[xp, yp, w1, w1p, z1, z1p], &mut removed);
                                        let (nx, ny) = (self.open_nbhd(x), self.open_nbhd(y));
                                        let mut hub = vec![false; g.n()];
                                        for v in 0..g.n() {
                                            removed[v] |= nx[v] && ny[v];
                                            hub[v] = nx[v] || ny[v];
                                        }
                                        self.evaluate(
                                            CandidateType::Type5,
                                            &[
                                                Edge::new(x, xp),
                                                Edge::new(y, yp),
                                                Edge::new(w1, w1p),
                                                Edge::new(z1, z1p),
                                            ],
                                            &removed,
                                            Some(&hub),
                                        )?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::max_restricted_matching;

    fn solve(g: &Graph) -> TwoP3Outcome {
        TwoP3Solver::new(ExactBackend::default()).solve(g).unwrap()
    }

    #[test]
    fn spider_host_needs_type3() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(mwim(&g).unwrap().value, 2);
        let out = solve(&g);
        assert_eq!(out.result.value, 3);
        assert_eq!(out.source, CandidateType::Type3);
        assert_eq!(out.result.witness, Matching::new([(0, 1), (2, 3), (4, 5)]));
    }

    #[test]
    fn small_examples() {
        assert_eq!(mwam_2p3free(&Graph::star(3)).unwrap().value, 1);
        let r = mwam_2p3free(&Graph::empty(4)).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
        assert_eq!(solve(&Graph::path(4)).source, CandidateType::Type2P4);
    }

    #[test]
    fn double_spiders_need_types_4_and_5() {
        // P6 is 2P3-free; its best acyclic matching is the perfect one, a
        // shape-(iii) tree.
        let p6 = Graph::path(6);
        let out = solve(&p6);
        assert_eq!(out.result.value, 3);
        assert_eq!(out.source, CandidateType::Type4);

        // shape (iv) with one leg per hub: x=0,x'=1,y=2,y'=3,w=4,w'=5,z=6,z'=7
        let iv = Graph::from_edges(8, &[(0, 1), (2, 3), (0, 2), (0, 4), (4, 5), (2, 6), (6, 7)])
            .unwrap();
        assert!(crate::classes::is_2p3_free(&iv));
        let out = solve(&iv);
        assert_eq!(out.result.value, 4);
        assert_eq!(out.source, CandidateType::Type5);
    }

    #[test]
    fn rejects_graphs_with_2p3() {
        let g = Graph::path(3).disjoint_union(&Graph::path(3));
        assert!(matches!(mwam_2p3free(&g), Err(Error::Not2P3Free { .. })));
    }

    #[test]
    fn agrees_with_oracle_on_complete_and_weighted() {
        for g in [
            Graph::complete(5),
            Graph::cycle(5),
            Graph::complete_bipartite(2, 3),
            Graph::from_weighted_edges(5, &[(0, 1, 4), (1, 2, 9), (2, 3, 4), (3, 4, 1), (0, 4, 2)])
                .unwrap(),
        ] {
            let want = max_restricted_matching(&g, MatchingKind::Acyclic, true).unwrap();
            assert_eq!(mwam_2p3free(&g).unwrap().value, want.value, "{g:?}");
        }
    }
}
