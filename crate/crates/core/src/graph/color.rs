//! Exact 3-colorability and 4-criticality oracles.

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{domain, Error, Result};

/// Default vertex cap for the backtracking oracle.
pub const DEFAULT_COLORING_CAP: usize = 24;

const HARD_CAP: usize = 64;

/// Vertex colors in `{0, 1, 2}`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<u8>);

impl Coloring {
    pub fn color(&self, v: usize) -> u8 {
        self.0[v]
    }

    /// Proper iff every vertex has a color in `{0,1,2}` and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && self.0.iter().all(|&c| c < 3) && g.edges().iter().all(|e| self.0[e.u] != self.0[e.v])
    }
}

struct Search<'a> {
    nbrs: &'a [Vec<usize>],
    rank: Vec<usize>,
    color: Vec<u8>,
    // forbidden[v] bit c set iff some neighbor of v has color c; counts allow undo.
    hits: Vec<[u8; 3]>,
}

impl Search<'_> {
    fn forbidden(&self, v: usize) -> u8 {
        (0..3).fold(0, |m, c| m | ((self.hits[v][c] > 0) as u8) << c)
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.color[v] = c;
        for &w in &self.nbrs[v] {
            self.hits[w][c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 3;
        for &w in &self.nbrs[v] {
            self.hits[w][c as usize] -= 1;
        }
    }

    /// Uncolored vertex with the fewest remaining colors; ties go to the
    /// earlier vertex in descending-degree order. `None` when all are colored.
    fn pick(&self) -> Option<(usize, u8)> {
        let mut best: Option<(usize, u8, u32)> = None;
        for v in 0..self.color.len() {
            if self.color[v] != 3 {
                continue;
            }
            let free = !self.forbidden(v) & 0b111;
            let k = free.count_ones();
            let better = match best {
                None => true,
                Some((b, _, bk)) => k < bk || (k == bk && self.rank[v] < self.rank[b]),
            };
            if better {
                best = Some((v, free, k));
                if k == 0 {
                    break;
                }
            }
        }
        best.map(|(v, free, _)| (v, free))
    }

    fn run(&mut self, max_used: u8) -> bool {
        let Some((v, free)) = self.pick() else {
            return true;
        };
        // Colors above max_used + 1 are symmetric to max_used + 1.
        let limit = (max_used + 1).min(2);
        for c in 0..=limit {
            if free >> c & 1 == 0 {
                continue;
            }
            self.assign(v, c);
            if self.run(max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// A proper 3-coloring of `g`, or `None` when none exists.
///
/// Backtracking with dynamic first-fail vertex choice; the witness is
/// deterministic for a given graph.
pub fn three_coloring_with_cap(g: &Graph, cap: usize) -> Result<Option<Coloring>> {
    let n = g.n();
    if n > cap.min(HARD_CAP) {
        return Err(Error::Capacity(format!(
            "3-coloring oracle is capped at {} vertices, graph has {n}",
            cap.min(HARD_CAP)
        )));
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(nbrs[v].len()));
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut s = Search {
        nbrs: &nbrs,
        rank,
        color: vec![3; n],
        hits: vec![[0; 3]; n],
    };
    // `max_used` starts "below zero": the first vertex may only take color 0.
    let found = match s.pick() {
        None => true,
        Some((v, _)) => {
            s.assign(v, 0);
            s.run(0)
        }
    };
    Ok(found.then_some(Coloring(s.color)))
}

pub fn three_coloring(g: &Graph) -> Result<Option<Coloring>> {
    three_coloring_with_cap(g, DEFAULT_COLORING_CAP)
}

pub fn is_3colorable(g: &Graph) -> Result<bool> {
    Ok(three_coloring(g)?.is_some())
}

/// Not 3-colorable, but every proper subgraph is: no isolated vertex and
/// every single-edge deletion is 3-colorable.
pub fn is_4critical(g: &Graph) -> Result<bool> {
    if (0..g.n()).any(|v| g.degree(v) == 0) || is_3colorable(g)? {
        return Ok(false);
    }
    for e in g.edges() {
        if !is_3colorable(&g.without_edge(e)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether an edge lies on a cycle of length exactly 3 or exactly 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCycles {
    pub on_3cycle: bool,
    pub on_4cycle: bool,
}

/// Triangle test: the endpoints share a neighbor. Four-cycle test: some
/// `a ~ u` and `b ~ v` with `a ≠ b`, outside `{u, v}`, are adjacent, closing
/// `u - v - b - a - u`.
pub fn edge_on_short_cycle(g: &Graph, e: Edge) -> Result<ShortCycles> {
    if !g.has_edge(e.u, e.v) {
        return Err(domain(format!("edge {e} is not in the graph")));
    }
    let on_3cycle = g.share_neighbor(e.u, e.v);
    let on_4cycle = g.neighbors(e.u).filter(|&a| a != e.v).any(|a| {
        g.neighbors(e.v)
            .filter(|&b| b != e.u && b != a)
            .any(|b| g.has_edge(a, b))
    });
    Ok(ShortCycles { on_3cycle, on_4cycle })
}
