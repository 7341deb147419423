//! Hopcroft–Karp maximum matching for bipartite graphs.

use std::collections::VecDeque;

use crate::graph::Graph;

const INF: usize = usize::MAX;

/// Maximum matching between `left` and the rest of `g`. Every edge of `g`
/// must have exactly one endpoint in `left`. Returns `mate` per vertex.
pub fn hopcroft_karp(g: &Graph, left: &[usize]) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![INF; n];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for &u in left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match mate[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        for &u in left {
            if mate[u].is_none() {
                augment(g, u, &mut mate, &mut dist);
            }
        }
    }
    mate
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], dist: &mut [usize]) -> bool {
    for i in 0..g.degree(u) {
        let v = g.incident(u)[i].0;
        let ok = match mate[v] {
            None => true,
            Some(w) => dist[w] == dist[u].wrapping_add(1) && augment(g, w, mate, dist),
        };
        if ok {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    dist[u] = INF;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_and_paths() {
        let g = Graph::complete_bipartite(3, 5);
        let mate = hopcroft_karp(&g, &[0, 1, 2]);
        assert_eq!(mate.iter().flatten().count(), 6);

        let p = Graph::path(6);
        let mate = hopcroft_karp(&p, &[0, 2, 4]);
        assert_eq!(mate.iter().flatten().count(), 6);
    }
}
