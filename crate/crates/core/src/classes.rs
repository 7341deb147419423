//! Graph-class recognizers and small counting oracles.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::cograph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::Limits;

/// A proper 2-colouring; `a` holds the colour of the smallest vertex of
/// every component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// BFS 2-colouring starting from the lowest unvisited id, which goes to
/// side A. `None` when `g` has an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (v, s) in side.iter().enumerate() {
        if *s == Some(false) {
            a.push(v);
        } else {
            b.push(v);
        }
    }
    Some(Bipartition { a, b })
}

/// True iff `g` has no induced path on four vertices. Uses the same
/// union/join splitting as [`cograph::build_cotree`].
pub fn is_p4_free(g: &Graph) -> bool {
    cograph::build_cotree(g).is_ok()
}

/// Induced P3s as `[end, centre, end]` with `end0 < end1`.
fn induced_p3s(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for c in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    out.push([a, c, b]);
                }
            }
        }
    }
    out
}

/// Two vertex-disjoint induced P3s with no edge between them, as
/// `[a, c, b, a', c', b']` (each triple end-centre-end).
pub fn find_induced_2p3(g: &Graph) -> Option<[usize; 6]> {
    let p3s = induced_p3s(g);
    for (i, p) in p3s.iter().enumerate() {
        for q in &p3s[i + 1..] {
            let separated = p
                .iter()
                .all(|&x| q.iter().all(|&y| x != y && !g.has_edge(x, y)));
            if separated {
                return Some([p[0], p[1], p[2], q[0], q[1], q[2]]);
            }
        }
    }
    None
}

pub fn is_2p3_free(g: &Graph) -> bool {
    find_induced_2p3(g).is_none()
}

/// Number of perfect matchings, by branching on the partner of the lowest
/// unmatched vertex. Exponential; guarded by
/// [`Limits::perfect_matching_max_vertices`].
pub fn count_perfect_matchings(g: &Graph) -> Result<u64> {
    count_perfect_matchings_with(g, &Limits::default())
}

pub fn count_perfect_matchings_with(g: &Graph, limits: &Limits) -> Result<u64> {
    if g.n() > limits.perfect_matching_max_vertices {
        return Err(Error::SizeGuard {
            what: "perfect matching count",
            actual: g.n(),
            limit: limits.perfect_matching_max_vertices,
        });
    }
    if g.n() % 2 == 1 {
        return Ok(0);
    }
    let mut covered = vec![false; g.n()];
    Ok(count_from(g, &mut covered, 0))
}

fn count_from(g: &Graph, covered: &mut [bool], start: usize) -> u64 {
    let Some(u) = (start..g.n()).find(|&v| !covered[v]) else {
        return 1;
    };
    covered[u] = true;
    let mut total = 0;
    for i in 0..g.degree(u) {
        let v = g.incident(u)[i].0;
        if !covered[v] {
            covered[v] = true;
            total += count_from(g, covered, u + 1);
            covered[v] = false;
        }
    }
    covered[u] = false;
    total
}
