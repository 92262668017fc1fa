//! Simple undirected graphs with a fixed vertex order.
//!
//! Vertices are `0..n`. The order is part of the graph's identity: the
//! extremal-middle condition of a path cover refers to it, so nothing in
//! this module relabels vertices unless asked to ([`Graph::permuted`]).

mod canon;
mod color;
mod graph6;
mod hajos;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

pub use canon::{canonical_form, enumerate_nonisomorphic, CanonicalForm, MAX_CANON_VERTICES, MAX_ENUMERATION_VERTICES};
pub use color::{
    edge_on_short_cycle, is_3colorable, is_4critical, three_coloring, three_coloring_with_cap, Coloring, ShortCycles,
    DEFAULT_COLORING_CAP,
};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, GRAPH6_HEADER, MAX_GRAPH6_VERTICES};
pub use hajos::{hajos_join, identify_nonadjacent};

/// An unordered edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph as a packed symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            adj: vec![0; n * stride],
        }
    }

    /// Builds a graph from a list of vertex pairs. Duplicates collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(domain(format!("edge {a}-{b} out of range for {n} vertices")));
            }
            if a == b {
                return Err(domain(format!("loop at vertex {a}")));
            }
            g.set(a, b, true);
        }
        Ok(g)
    }

    pub(crate) fn set(&mut self, a: usize, b: usize, on: bool) {
        let (wa, ba) = (b / 64, 1u64 << (b % 64));
        let (wb, bb) = (a / 64, 1u64 << (a % 64));
        if on {
            self.adj[a * self.stride + wa] |= ba;
            self.adj[b * self.stride + wb] |= bb;
        } else {
            self.adj[a * self.stride + wa] &= !ba;
            self.adj[b * self.stride + wb] &= !bb;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a * self.stride + b / 64] >> (b % 64) & 1 == 1
    }

    /// Packed neighbor set of `v`; bit `w` is set iff `vw` is an edge.
    pub fn neighbor_words(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbor_words(v)
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_words(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges, sorted lexicographically by `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Whether `a` and `b` have a common neighbor.
    pub fn share_neighbor(&self, a: usize, b: usize) -> bool {
        self.neighbor_words(a)
            .iter()
            .zip(self.neighbor_words(b))
            .any(|(x, y)| x & y != 0)
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(domain(format!("edge {e} is not in the graph")));
        }
        let mut g = self.clone();
        g.set(e.u, e.v, false);
        Ok(g)
    }

    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        if e.v >= self.n {
            return Err(domain(format!("edge {e} out of range for {} vertices", self.n)));
        }
        let mut g = self.clone();
        g.set(e.u, e.v, true);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(domain("not a permutation of the vertex set"));
        }
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.set(perm[e.u], perm[e.v], true);
        }
        Ok(g)
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Graph with one more vertex, adjacent to exactly the vertices in `nbrs`.
    pub fn extended(&self, nbrs: impl IntoIterator<Item = usize>) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1);
        for e in self.edges() {
            g.set(e.u, e.v, true);
        }
        for w in nbrs {
            if w >= self.n {
                return Err(domain(format!("vertex {w} out of range")));
            }
            g.set(w, self.n, true);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set(u, v, true);
        }
    }
    g
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set(v - 1, v, true);
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n);
    g.set(n - 1, 0, true);
    Ok(g)
}

/// Wheel `W_n`: rim cycle on vertices `0..n`, hub `n` adjacent to all of them.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("a wheel needs a rim of at least 3 vertices, got {n}")));
    }
    cycle(n)?.extended(0..n)
}

/// The hub vertex of [`wheel`]`(n)`.
pub fn wheel_hub(n: usize) -> usize {
    n
}

/// Moser spindle with vertices `v1..v7` mapped to `0..6`:
/// `v1v2 v1v3 v1v7 v2v3 v2v4 v3v4 v4v5 v4v6 v5v6 v5v7 v6v7`.
pub fn moser_spindle() -> Graph {
    const EDGES: [(usize, usize); 11] = [
        (1, 2),
        (1, 3),
        (1, 7),
        (2, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (4, 6),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    Graph::from_edges(7, EDGES.iter().map(|&(a, b)| (a - 1, b - 1))).expect("static edge list")
}

/// Star `K_{1,k}` with center `0`.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for v in 1..=k {
        g.set(0, v, true);
    }
    g
}
