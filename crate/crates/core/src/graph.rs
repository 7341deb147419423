//! Undirected simple graphs with integer edge weights.
//!
//! Vertices are dense ids `0..n`. Edges are stored once, normalized so the
//! smaller endpoint comes first, and kept in ascending order; the position of
//! an edge in that order is its *edge id*. Every algorithm in the crate that
//! breaks ties does so through this order.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.0 == x {
            self.1
        } else {
            assert_eq!(self.1, x, "{x} is not an endpoint of {self:?}");
            self.0
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    weights: Vec<i64>,
    // neighbour lists sorted by neighbour id, each entry carries the edge id
    adj: Vec<Vec<(usize, usize)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("weights", &self.weights)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            weights: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph with unit weights. Loops, parallel edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<E: Into<Edge> + Copy>(n: usize, edges: &[E]) -> Result<Self> {
        let weighted: Vec<(usize, usize, i64)> = edges
            .iter()
            .map(|&e| {
                let e: Edge = e.into();
                (e.0, e.1, 1)
            })
            .collect();
        Self::from_weighted_edges(n, &weighted)
    }

    pub fn from_weighted_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let mut list: Vec<(Edge, i64)> = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            list.push((Edge::new(u, v), w));
        }
        list.sort_by_key(|&(e, _)| e);
        for pair in list.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {:?}",
                    pair[0].0
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(e, _)) in list.iter().enumerate() {
            adj[e.0].push((e.1, id));
            adj[e.1].push((e.0, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list.iter().map(|&(e, _)| e).collect(),
            weights: list.iter().map(|&(_, w)| w).collect(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order; the index is the edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, edge_id: usize) -> i64 {
        self.weights[edge_id]
    }

    pub fn weighted_edges(&self) -> impl Iterator<Item = (Edge, i64)> + '_ {
        self.edges.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let row = &self.adj[u];
        row.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<i64> {
        self.edge_id(u, v).map(|id| self.weights[id])
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&(v, _)| v)
    }

    /// Neighbours of `u` paired with the id of the connecting edge.
    pub fn incident(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_weight(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// Same vertices and edges, weights replaced by `f(edge, old_weight)`.
    pub fn reweighted(&self, mut f: impl FnMut(Edge, i64) -> i64) -> Graph {
        let mut g = self.clone();
        for (id, e) in self.edges.iter().enumerate() {
            g.weights[id] = f(*e, self.weights[id]);
        }
        g
    }

    pub fn unit_weighted(&self) -> Graph {
        self.reweighted(|_, _| 1)
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` of `self`; the returned vector is that map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &(w, id) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j, self.weights[id]));
                }
            }
        }
        let g = Graph::from_weighted_edges(vertices.len(), &edges)
            .expect("induced subgraph of a simple graph is simple");
        (g, vertices.to_vec())
    }

    /// Removes `drop` (a vertex mask) and returns the rest with its id map.
    pub fn without_vertices(&self, drop: &[bool]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges: Vec<(usize, usize, i64)> =
            self.weighted_edges().map(|(e, w)| (e.0, e.1, w)).collect();
        edges.extend(other.weighted_edges().map(|(e, w)| (e.0 + shift, e.1 + shift, w)));
        Graph::from_weighted_edges(self.n + other.n, &edges).expect("union of simple graphs")
    }

    /// Disjoint union plus every edge between the two sides (unit weight).
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges: Vec<(usize, usize, i64)> =
            self.weighted_edges().map(|(e, w)| (e.0, e.1, w)).collect();
        edges.extend(other.weighted_edges().map(|(e, w)| (e.0 + shift, e.1 + shift, w)));
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + shift, 1));
            }
        }
        Graph::from_weighted_edges(self.n + other.n, &edges).expect("join of simple graphs")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("complete bipartite graph")
    }
}
