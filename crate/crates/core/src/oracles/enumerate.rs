use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{is_kind_matching, Matching, MatchingKind};
use crate::oracles::{blossom, maximum_matching, Limits};

/// Lazily yields every maximum matching of a graph, each once, in
/// lexicographic order of the sorted edge lists.
pub struct MaximumMatchings<'a> {
    g: &'a Graph,
    target: usize,
    matched: Vec<bool>,
    chosen: Vec<usize>,
    // (edge id, stage): 0 = fresh, 1 = include branch done, 2 = finished,
    // 3 = undo marker for an included edge
    stack: Vec<(usize, u8)>,
}

pub fn enumerate_maximum_matchings<'a>(g: &'a Graph, limits: &Limits) -> Result<MaximumMatchings<'a>> {
    if g.n() > limits.enumeration_max_vertices {
        return Err(Error::SizeGuard {
            what: "maximum matching enumeration",
            actual: g.n(),
            limit: limits.enumeration_max_vertices,
        });
    }
    let target = maximum_matching(g).value as usize;
    Ok(MaximumMatchings {
        g,
        target,
        matched: vec![false; g.n()],
        chosen: Vec::new(),
        stack: vec![(0, 0)],
    })
}

impl MaximumMatchings<'_> {
    fn reachable(&self, i: usize) -> usize {
        let open: Vec<(usize, usize)> = self.g.edges()[i..]
            .iter()
            .filter(|e| !self.matched[e.0] && !self.matched[e.1])
            .map(|e| (e.0, e.1))
            .collect();
        if open.is_empty() {
            return 0;
        }
        let h = Graph::from_edges(self.g.n(), &open).expect("subgraph");
        blossom::maximum_matching_size(&h)
    }

    fn set(&mut self, id: usize, on: bool) {
        let e = self.g.edges()[id];
        self.matched[e.0] = on;
        self.matched[e.1] = on;
        if on {
            self.chosen.push(id);
        } else {
            self.chosen.pop();
        }
    }
}

impl Iterator for MaximumMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        while let Some(&(i, stage)) = self.stack.last() {
            let top = self.stack.len() - 1;
            match stage {
                0 => {
                    if self.chosen.len() == self.target {
                        let found =
                            Matching::new(self.chosen.iter().map(|&id| self.g.edges()[id]));
                        self.stack.pop();
                        return Some(found);
                    }
                    if i == self.g.edge_count()
                        || self.chosen.len() + self.reachable(i) < self.target
                    {
                        self.stack.pop();
                        continue;
                    }
                    self.stack[top].1 = 1;
                    let e = self.g.edges()[i];
                    if !self.matched[e.0] && !self.matched[e.1] {
                        self.set(i, true);
                        // undo marker below the include subtree
                        self.stack.push((usize::MAX, 3));
                        self.stack.push((i + 1, 0));
                    }
                }
                1 => {
                    self.stack[top].1 = 2;
                    self.stack.push((i + 1, 0));
                }
                2 => {
                    self.stack.pop();
                }
                _ => {
                    // include subtree exhausted
                    self.stack.pop();
                    let id = *self.chosen.last().unwrap();
                    self.set(id, false);
                }
            }
        }
        None
    }
}

/// True iff every maximum matching of `g` is feasible for `kind`.
pub fn every_maximum_matching_is(g: &Graph, kind: MatchingKind, limits: &Limits) -> Result<bool> {
    for m in enumerate_maximum_matchings(g, limits)? {
        if !is_kind_matching(g, &m, kind)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(g: &Graph) -> Vec<Matching> {
        enumerate_maximum_matchings(g, &Limits::default()).unwrap().collect()
    }

    #[test]
    fn listing_examples() {
        assert_eq!(
            all(&Graph::cycle(4)),
            vec![Matching::new([(0, 1), (2, 3)]), Matching::new([(0, 3), (1, 2)])]
        );
        assert_eq!(all(&Graph::complete(2)), vec![Matching::new([(0, 1)])]);
        assert_eq!(
            all(&Graph::path(3)),
            vec![Matching::new([(0, 1)]), Matching::new([(1, 2)])]
        );
        assert_eq!(all(&Graph::empty(3)), vec![Matching::empty()]);
        assert_eq!(all(&Graph::complete(6)).len(), 15);
    }

    #[test]
    fn every_maximum_examples() {
        let l = Limits::default();
        assert!(every_maximum_matching_is(&Graph::cycle(5), MatchingKind::Acyclic, &l).unwrap());
        assert!(!every_maximum_matching_is(&Graph::cycle(4), MatchingKind::Acyclic, &l).unwrap());
        assert!(every_maximum_matching_is(&Graph::cycle(3), MatchingKind::Induced, &l).unwrap());
    }
}
