//! Union-find with rollback (union by size, no path compression), used to
//! keep G(M) a forest while a search adds and removes matching edges.

#[derive(Clone, Debug)]
pub struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    // (attached root, size of the root it was attached to before the union)
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.history.push((rb, self.size[ra]));
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Opaque marker for [`RollbackDsu::rollback`].
    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    pub fn rollback(&mut self, checkpoint: usize) {
        while self.history.len() > checkpoint {
            let (child, old_size) = self.history.pop().unwrap();
            let root = self.parent[child];
            self.size[root] = old_size;
            self.parent[child] = child;
        }
    }
}
