//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS formulation, O(n^3)).

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for i in 0..self.g.degree(v) {
                let to = self.g.incident(v)[i].0;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for j in 0..n {
                        if self.blossom[self.base[j]] {
                            self.base[j] = cur;
                            if !self.used[j] {
                                self.used[j] = true;
                                self.queue.push(j);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push(m);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.n();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(w) = self.g.neighbors(v).find(|&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// `mate[v]` of a maximum matching of `g` (weights are ignored).
pub fn maximum_matching_mates(g: &Graph) -> Vec<Option<usize>> {
    Search::new(g)
        .run()
        .into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}

pub fn maximum_matching_size(g: &Graph) -> usize {
    maximum_matching_mates(g).iter().filter(|m| m.is_some()).count() / 2
}
