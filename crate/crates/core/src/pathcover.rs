//! Length-2 path covers: the combinatorial side of degree-one certificates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::gf2::{BitVector, Gf2Matrix};
use crate::graph::{edge_on_short_cycle, is_3colorable, Edge, Graph};
use crate::nulla::Set4Combination;
use crate::poly::{
    edge_cubic, lift_edge_cubic, lift_path_poly, path_poly, verify_certificate, BayerSystem, Certificate, Gf2Polynomial,
};

/// The path `a - mid - b`, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 3]", try_from = "[usize; 3]")]
pub struct Path2 {
    pub a: usize,
    pub mid: usize,
    pub b: usize,
}

impl Path2 {
    /// Panics when two of the vertices coincide.
    pub fn new(i: usize, mid: usize, k: usize) -> Self {
        Self::try_new(i, mid, k).expect("path vertices must be distinct")
    }

    pub fn try_new(i: usize, mid: usize, k: usize) -> Result<Self> {
        if i == k || i == mid || mid == k {
            return Err(domain(format!("{i}-{mid}-{k} repeats a vertex")));
        }
        Ok(Path2 {
            a: i.min(k),
            mid,
            b: i.max(k),
        })
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.a || v == self.mid || v == self.b
    }

    pub fn is_endpoint(&self, v: usize) -> bool {
        v == self.a || v == self.b
    }

    /// The middle vertex is smaller than both endpoints or larger than both.
    pub fn extremal_middle(&self) -> bool {
        (self.mid < self.a) == (self.mid < self.b)
    }

    pub fn edges(&self) -> [Edge; 2] {
        [Edge::new(self.a, self.mid), Edge::new(self.mid, self.b)]
    }

    pub fn is_in(&self, g: &Graph) -> bool {
        self.b < g.n() && self.mid < g.n() && g.has_edge(self.a, self.mid) && g.has_edge(self.mid, self.b)
    }
}

impl From<Path2> for [usize; 3] {
    fn from(p: Path2) -> Self {
        [p.a, p.mid, p.b]
    }
}

impl TryFrom<[usize; 3]> for Path2 {
    type Error = Error;

    fn try_from([i, j, k]: [usize; 3]) -> Result<Self> {
        Path2::try_new(i, j, k)
    }
}

impl fmt::Display for Path2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.mid, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathCover {
    pub paths: BTreeSet<Path2>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

impl FromIterator<Path2> for PathCover {
    fn from_iter<I: IntoIterator<Item = Path2>>(iter: I) -> Self {
        PathCover {
            paths: iter.into_iter().collect(),
        }
    }
}

/// Every length-2 path of `g`, sorted.
pub fn enumerate_paths2(g: &Graph) -> Vec<Path2> {
    let mut out = Vec::new();
    for mid in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(mid).collect();
        for (x, &a) in nb.iter().enumerate() {
            for &b in &nb[x + 1..] {
                out.push(Path2 { a, mid, b });
            }
        }
    }
    out.sort();
    out
}

/// Per-condition outcome of [`verify_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCheck {
    /// Edges lying on an odd number of the paths.
    pub odd_edges: Vec<Edge>,
    pub extremal_middle_count: usize,
    /// Non-adjacent pairs that end an odd number of the paths.
    pub odd_nonadjacent_pairs: Vec<(usize, usize)>,
}

impl CoverCheck {
    pub fn is_valid(&self) -> bool {
        self.odd_edges.is_empty() && self.extremal_middle_count % 2 == 1 && self.odd_nonadjacent_pairs.is_empty()
    }

    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for e in &self.odd_edges {
            v.push(format!("edge {e} lies on an odd number of paths"));
        }
        if self.extremal_middle_count.is_multiple_of(2) {
            v.push(format!(
                "{} paths have an extremal middle vertex (need an odd number)",
                self.extremal_middle_count
            ));
        }
        for (a, b) in &self.odd_nonadjacent_pairs {
            v.push(format!("non-adjacent pair {a},{b} ends an odd number of paths"));
        }
        v
    }
}

pub fn verify_cover(g: &Graph, cover: &PathCover) -> Result<CoverCheck> {
    if let Some(p) = cover.paths.iter().find(|p| !p.is_in(g)) {
        return Err(domain(format!("{p} is not a path of the graph")));
    }
    let mut on_edge: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut ends: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &cover.paths {
        for e in p.edges() {
            *on_edge.entry(e).or_default() += 1;
        }
        if !g.has_edge(p.a, p.b) {
            *ends.entry((p.a, p.b)).or_default() += 1;
        }
    }
    Ok(CoverCheck {
        odd_edges: on_edge
            .into_iter()
            .filter(|(_, c)| c % 2 == 1)
            .map(|(e, _)| e)
            .collect(),
        extremal_middle_count: cover.paths.iter().filter(|p| p.extremal_middle()).count(),
        odd_nonadjacent_pairs: ends.into_iter().filter(|(_, c)| c % 2 == 1).map(|(k, _)| k).collect(),
    })
}

/// Solves the cover conditions as a linear system over GF(2), one unknown
/// per length-2 path.
pub fn path_cover_search(g: &Graph) -> Result<Option<PathCover>> {
    let paths = enumerate_paths2(g);
    let edges = g.edges();
    let edge_row: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(r, &e)| (e, r)).collect();
    let mut pair_row: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &paths {
        if !g.has_edge(p.a, p.b) {
            let next = edges.len() + pair_row.len();
            pair_row.entry((p.a, p.b)).or_insert(next);
        }
    }
    let extremal_row = edges.len() + pair_row.len();
    let mut m = Gf2Matrix::zeros(extremal_row + 1, paths.len())?;
    for (c, p) in paths.iter().enumerate() {
        for e in p.edges() {
            m.flip(edge_row[&e], c);
        }
        if let Some(&r) = pair_row.get(&(p.a, p.b)) {
            m.flip(r, c);
        }
        if p.extremal_middle() {
            m.flip(extremal_row, c);
        }
    }
    let rhs = BitVector::from_ones(extremal_row + 1, [extremal_row]);
    let Some(x) = m.solve_owned(&rhs)?.solution else {
        return Ok(None);
    };
    let cover: PathCover = x.ones().map(|c| paths[c]).collect();
    debug_assert!(verify_cover(g, &cover)?.is_valid());
    Ok(Some(cover))
}

/// `count(i -> j)`: paths through `i` that end at `j`, for each ordered pair.
fn endpoint_counts<'a>(n: usize, paths: impl IntoIterator<Item = &'a Path2>) -> Vec<Vec<usize>> {
    let mut count = vec![vec![0usize; n]; n];
    for p in paths {
        for i in [p.a, p.mid, p.b] {
            for j in [p.a, p.b] {
                if i != j {
                    count[i][j] += 1;
                }
            }
        }
    }
    count
}

/// Turns a valid cover into a degree-one certificate: one path
/// polynomial per path plus the edge cubics of the pairs `i < j`
/// with `count(i -> j)` odd, rewritten over Bayer's generators.
pub fn cover_to_certificate(g: &Graph, cover: &PathCover) -> Result<Certificate> {
    let check = verify_cover(g, cover)?;
    if !check.is_valid() {
        return Err(domain(format!("not a path cover: {}", check.violations().join("; "))));
    }
    let n = g.n();
    let count = endpoint_counts(n, &cover.paths);
    let mut cert = Certificate::new(n, 1);
    for p in &cover.paths {
        for (key, a) in lift_path_poly(n, p.a, p.mid, p.b) {
            cert.add_to(key, &a);
        }
    }
    for (i, row) in count.iter().enumerate() {
        for (j, &c) in row.iter().enumerate().skip(i + 1) {
            if c % 2 == 1 {
                if !g.has_edge(i, j) {
                    return Err(Error::Unsound(format!(
                        "cover leaves an odd endpoint count on non-edge {i},{j}"
                    )));
                }
                for (key, a) in lift_edge_cubic(n, i, j) {
                    cert.add_to(key, &a);
                }
            }
        }
    }
    if verify_certificate(&BayerSystem::new(g), &cert)? {
        Ok(cert)
    } else {
        Err(Error::Unsound(
            "certificate built from a valid cover does not expand to 1".into(),
        ))
    }
}

/// Reads a cover off a combination of edge cubics and path polynomials equal to 1: the paths whose
/// path polynomial appears an odd number of times.
pub fn certificate_to_cover(g: &Graph, comb: &Set4Combination) -> Result<PathCover> {
    let n = g.n();
    for e in &comb.edges {
        if e.v >= n || !g.has_edge(e.u, e.v) {
            return Err(domain(format!("edge cubic term names {e}, which is not an edge")));
        }
    }
    let mut odd: BTreeSet<Path2> = BTreeSet::new();
    let mut sum = Gf2Polynomial::zero(n);
    for &(i, j, k) in &comb.paths {
        let p = Path2::try_new(i, j, k)?;
        if !p.is_in(g) {
            return Err(domain(format!("path polynomial term names {p}, which is not a path")));
        }
        sum += &path_poly(n, i, j, k);
        if !odd.remove(&p) {
            odd.insert(p);
        }
    }
    for e in &comb.edges {
        sum += &edge_cubic(n, e.u, e.v);
    }
    if !sum.is_one() {
        return Err(domain("the combination does not sum to 1"));
    }
    Ok(PathCover { paths: odd })
}

/// Witness that an uncolorable graph has no degree-one certificate: an edge
/// whose deletion is 3-colorable and which lies on no 3- or 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionWitness {
    pub edge: Edge,
    pub deletion_3colorable: bool,
    pub on_no_3cycle: bool,
    pub on_no_4cycle: bool,
}

impl ObstructionWitness {
    pub fn is_valid(&self) -> bool {
        self.deletion_3colorable && self.on_no_3cycle && self.on_no_4cycle
    }
}

/// First edge (in sorted order) meeting the obstruction, if any. Rejects
/// 3-colorable input.
pub fn corollary_obstruction(g: &Graph) -> Result<Option<ObstructionWitness>> {
    if is_3colorable(g)? {
        return Err(domain("graph is 3-colorable"));
    }
    for e in g.edges() {
        let sc = edge_on_short_cycle(g, e)?;
        if sc.on_3cycle || sc.on_4cycle {
            continue;
        }
        if is_3colorable(&g.without_edge(e)?)? {
            return Ok(Some(ObstructionWitness {
                edge: e,
                deletion_3colorable: true,
                on_no_3cycle: true,
                on_no_4cycle: true,
            }));
        }
    }
    Ok(None)
}

/// The three parity statements `(p1, p2, p3)` for a set of length-2 paths:
/// an odd number of pairs `i < j` with odd `count(i -> j)`; an odd total
/// `Σ_{i<j} count(i -> j)`; an odd number of extremal-middle paths.
pub fn prop22_predicates(g: &Graph, paths: &[Path2]) -> (bool, bool, bool) {
    let count = endpoint_counts(g.n(), paths);
    let mut odd_pairs = 0usize;
    let mut total = 0usize;
    for (i, row) in count.iter().enumerate() {
        for &c in &row[i + 1..] {
            odd_pairs += c % 2;
            total += c;
        }
    }
    let extremal = paths.iter().filter(|p| p.extremal_middle()).count();
    (odd_pairs % 2 == 1, total % 2 == 1, extremal % 2 == 1)
}
