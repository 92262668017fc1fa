//! Hajós's operators on 4-critical graphs.

use super::{Edge, Graph};
use crate::error::{domain, Result};

/// Hajós join of `g` along `vw` and `h` along `xy`.
///
/// `x` is identified with `v`, both named edges are removed and `wy` is
/// added. Vertices of `g` keep their indices; the remaining vertices of `h`
/// follow in their original order.
pub fn hajos_join(g: &Graph, vw: (usize, usize), h: &Graph, xy: (usize, usize)) -> Result<Graph> {
    let (v, w) = vw;
    let (x, y) = xy;
    if v == w || !g.has_edge(v, w) {
        return Err(domain(format!("{v}-{w} is not an edge of the first graph")));
    }
    if x == y || !h.has_edge(x, y) {
        return Err(domain(format!("{x}-{y} is not an edge of the second graph")));
    }
    let map = |u: usize| {
        use std::cmp::Ordering::*;
        match u.cmp(&x) {
            Equal => v,
            Less => g.n() + u,
            Greater => g.n() + u - 1,
        }
    };
    let cut_g = Edge::new(v, w);
    let cut_h = Edge::new(x, y);
    let edges = g
        .edges()
        .into_iter()
        .filter(|&e| e != cut_g)
        .map(|e| (e.u, e.v))
        .chain(
            h.edges()
                .into_iter()
                .filter(|&e| e != cut_h)
                .map(|e| (map(e.u), map(e.v))),
        )
        .chain(std::iter::once((w, map(y))));
    Graph::from_edges(g.n() + h.n() - 1, edges)
}

/// Merges non-adjacent `u` and `v` into one vertex adjacent to the union of
/// their neighborhoods. The merged vertex takes index `min(u, v)`; vertices
/// above `max(u, v)` shift down by one.
pub fn identify_nonadjacent(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n() || v >= g.n() {
        return Err(domain(format!("vertex out of range: {u}, {v}")));
    }
    if u == v {
        return Err(domain("cannot identify a vertex with itself"));
    }
    if g.has_edge(u, v) {
        return Err(domain(format!("{u} and {v} are adjacent")));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let map = |a: usize| {
        if a == gone {
            keep
        } else if a > gone {
            a - 1
        } else {
            a
        }
    };
    Graph::from_edges(g.n() - 1, g.edges().into_iter().map(|e| (map(e.u), map(e.v))))
}
