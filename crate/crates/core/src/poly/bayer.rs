//! Bayer's 3-coloring system, certificates over it, and the alternative
//! polynomial families that decide degree-one certificates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Gf2Polynomial, Monomial};
use crate::error::{domain, Result};
use crate::graph::{Edge, Graph};

/// `x_i^3 + 1`.
pub fn vertex_poly(nvars: usize, i: usize) -> Gf2Polynomial {
    Gf2Polynomial::from_terms(nvars, [Monomial::var_pow(nvars, i, 3), Monomial::one(nvars)])
}

/// `x_i^2 + x_i x_j + x_j^2`.
pub fn edge_poly(nvars: usize, i: usize, j: usize) -> Gf2Polynomial {
    Gf2Polynomial::from_terms(
        nvars,
        [
            Monomial::from_vars(nvars, &[i, i]),
            Monomial::from_vars(nvars, &[i, j]),
            Monomial::from_vars(nvars, &[j, j]),
        ],
    )
}

/// `x_i^2 x_j + x_i x_j^2 + 1`, one per edge `ij`.
pub fn edge_cubic(nvars: usize, i: usize, j: usize) -> Gf2Polynomial {
    Gf2Polynomial::from_terms(
        nvars,
        [
            Monomial::from_vars(nvars, &[i, i, j]),
            Monomial::from_vars(nvars, &[i, j, j]),
            Monomial::one(nvars),
        ],
    )
}

/// `x_i^2 x_k + x_i x_j x_k + x_j^2 x_k`, i.e. `x_k` times the edge polynomial of `ij`.
pub fn edge_times_var(nvars: usize, i: usize, j: usize, k: usize) -> Gf2Polynomial {
    Gf2Polynomial::from_terms(
        nvars,
        [
            Monomial::from_vars(nvars, &[i, i, k]),
            Monomial::from_vars(nvars, &[i, j, k]),
            Monomial::from_vars(nvars, &[j, j, k]),
        ],
    )
}

/// `x_i^2 x_k + x_j^2 x_k + x_i x_j^2 + x_i x_k^2` for the path `i - j - k`.
/// Symmetric in the endpoints `i`, `k`.
pub fn path_poly(nvars: usize, i: usize, j: usize, k: usize) -> Gf2Polynomial {
    Gf2Polynomial::from_terms(
        nvars,
        [
            Monomial::from_vars(nvars, &[i, i, k]),
            Monomial::from_vars(nvars, &[j, j, k]),
            Monomial::from_vars(nvars, &[i, j, j]),
            Monomial::from_vars(nvars, &[i, k, k]),
        ],
    )
}

/// Identifies a generator of Bayer's system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorKey {
    Vertex(usize),
    Edge(Edge),
}

impl fmt::Display for GeneratorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKey::Vertex(v) => write!(f, "vertex {v}"),
            GeneratorKey::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub key: GeneratorKey,
    pub poly: Gf2Polynomial,
}

/// Bayer's system: `x_i^3 + 1` per vertex, then `x_i^2 + x_i x_j + x_j^2`
/// per edge in sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BayerSystem {
    nvars: usize,
    generators: Vec<Generator>,
}

impl BayerSystem {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let vertices = (0..n).map(|i| Generator {
            key: GeneratorKey::Vertex(i),
            poly: vertex_poly(n, i),
        });
        let edges = g.edges().into_iter().map(|e| Generator {
            key: GeneratorKey::Edge(e),
            poly: edge_poly(n, e.u, e.v),
        });
        BayerSystem {
            nvars: n,
            generators: vertices.chain(edges).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn vertex_polys(&self) -> &[Generator] {
        &self.generators[..self.nvars]
    }

    pub fn edge_polys(&self) -> &[Generator] {
        &self.generators[self.nvars..]
    }

    pub fn get(&self, key: &GeneratorKey) -> Option<&Generator> {
        match key {
            GeneratorKey::Vertex(v) => self.generators.get(*v).filter(|g| g.key == *key),
            GeneratorKey::Edge(_) => self
                .edge_polys()
                .binary_search_by(|g| g.key.cmp(key))
                .ok()
                .map(|i| &self.edge_polys()[i]),
        }
    }
}

/// Multipliers `α_f` per generator with `Σ α_f f = 1` and `deg α_f <= degree`.
/// Generators without an entry have multiplier zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub nvars: usize,
    pub degree: usize,
    pub multipliers: BTreeMap<GeneratorKey, Gf2Polynomial>,
}

impl Certificate {
    pub fn new(nvars: usize, degree: usize) -> Self {
        Certificate {
            nvars,
            degree,
            multipliers: BTreeMap::new(),
        }
    }

    /// Adds `p` to the multiplier of `key`, dropping it if it cancels to zero.
    pub fn add_to(&mut self, key: GeneratorKey, p: &Gf2Polynomial) {
        let entry = self
            .multipliers
            .entry(key)
            .or_insert_with(|| Gf2Polynomial::zero(p.nvars()));
        *entry += p;
        if entry.is_zero() {
            self.multipliers.remove(&key);
        }
    }

    /// Largest multiplier degree actually used.
    pub fn max_multiplier_degree(&self) -> Option<usize> {
        self.multipliers.values().filter_map(Gf2Polynomial::degree).max()
    }

    /// Total number of monomials across all multipliers.
    pub fn size(&self) -> usize {
        self.multipliers.values().map(Gf2Polynomial::term_count).sum()
    }

    /// Fully expanded `Σ α_f f`.
    pub fn combination(&self, sys: &BayerSystem) -> Result<Gf2Polynomial> {
        if self.nvars != sys.nvars() {
            return Err(domain(format!(
                "certificate has {} variables, system has {}",
                self.nvars,
                sys.nvars()
            )));
        }
        let mut sum = Gf2Polynomial::zero(sys.nvars());
        for (key, alpha) in &self.multipliers {
            let g = sys
                .get(key)
                .ok_or_else(|| domain(format!("certificate names {key}, which is not a generator")))?;
            sum += &alpha.multiply(&g.poly);
        }
        Ok(sum)
    }
}

/// Whether `cert` certifies infeasibility of `sys` within its degree bound.
pub fn verify_certificate(sys: &BayerSystem, cert: &Certificate) -> Result<bool> {
    let sum = cert.combination(sys)?;
    let within = cert.max_multiplier_degree().is_none_or(|d| d <= cert.degree);
    Ok(within && sum.is_one())
}

/// The equivalent linear families that decide a degree-one certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prop21Variant {
    /// `x_i^3 + 1` for every vertex, `x_k (x_i^2 + x_i x_j + x_j^2)` for every
    /// edge `ij` and every vertex `k`.
    OriginalTimesMonomials,
    /// `edge_cubic` per edge and `edge_times_var` per edge `ij` and vertex `k ∉ {i, j}`.
    Set3,
    /// `edge_cubic` per edge and `path_poly` per ordered pair of incident edges
    /// `(ij, jk)`, `i ≠ k`.
    Set4,
}

pub fn prop21_system(g: &Graph, variant: Prop21Variant) -> Vec<Gf2Polynomial> {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::new();
    match variant {
        Prop21Variant::OriginalTimesMonomials => {
            out.extend((0..n).map(|i| vertex_poly(n, i)));
            for e in &edges {
                let f = edge_poly(n, e.u, e.v);
                out.extend((0..n).map(|k| f.mul_monomial(&Monomial::var_pow(n, k, 1))));
            }
        }
        Prop21Variant::Set3 => {
            out.extend(edges.iter().map(|e| edge_cubic(n, e.u, e.v)));
            for e in &edges {
                out.extend(
                    (0..n)
                        .filter(|&k| !e.has_endpoint(k))
                        .map(|k| edge_times_var(n, e.u, e.v, k)),
                );
            }
        }
        Prop21Variant::Set4 => {
            out.extend(edges.iter().map(|e| edge_cubic(n, e.u, e.v)));
            for j in 0..n {
                for i in g.neighbors(j) {
                    for k in g.neighbors(j).filter(|&k| k != i) {
                        out.push(path_poly(n, i, j, k));
                    }
                }
            }
        }
    }
    out
}

/// `edge_cubic` for edge `ij` as `x_j · edge(ij) + 1 · vertex(j)`.
pub fn lift_edge_cubic(nvars: usize, i: usize, j: usize) -> [(GeneratorKey, Gf2Polynomial); 2] {
    [
        (GeneratorKey::Edge(Edge::new(i, j)), Gf2Polynomial::var(nvars, j)),
        (GeneratorKey::Vertex(j), Gf2Polynomial::one(nvars)),
    ]
}

/// `path_poly` for the path `i - j - k` as `x_k · edge(ij) + x_i · edge(jk)`.
pub fn lift_path_poly(nvars: usize, i: usize, j: usize, k: usize) -> [(GeneratorKey, Gf2Polynomial); 2] {
    [
        (GeneratorKey::Edge(Edge::new(i, j)), Gf2Polynomial::var(nvars, k)),
        (GeneratorKey::Edge(Edge::new(j, k)), Gf2Polynomial::var(nvars, i)),
    ]
}

/// Outcome of checking the rewriting identities on one path `i - j - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendixCheck {
    /// path_poly(i,j,k) = edge_times_var(ij; k) + edge_times_var(jk; i).
    pub path_splits: bool,
    /// edge_cubic(i,j) = x_j · edge(ij) + (x_j^3 + 1).
    pub edge_cubic_lifts: bool,
    /// edge_times_var(ij; k) = x_k · edge(ij).
    pub edge_times_var_lifts: bool,
}

impl AppendixCheck {
    pub fn all(&self) -> bool {
        self.path_splits && self.edge_cubic_lifts && self.edge_times_var_lifts
    }
}

/// Expands the identities relating `edge_cubic`, `edge_times_var`, `path_poly` and Bayer's generators
/// for edges `ij`, `jk` of `g`.
pub fn appendix_rewrite_identity(g: &Graph, i: usize, j: usize, k: usize) -> Result<AppendixCheck> {
    if i == k || !g.has_edge(i, j) || !g.has_edge(j, k) {
        return Err(domain(format!("{i}-{j}-{k} is not a length-2 path")));
    }
    let n = g.n();
    let xk = Gf2Polynomial::var(n, k);
    let xj = Gf2Polynomial::var(n, j);
    let path_splits = path_poly(n, i, j, k) == &edge_times_var(n, i, j, k) + &edge_times_var(n, j, k, i);
    let edge_cubic_lifts = edge_cubic(n, i, j) == &(&xj * &edge_poly(n, i, j)) + &vertex_poly(n, j);
    let edge_times_var_lifts = edge_times_var(n, i, j, k) == &xk * &edge_poly(n, i, j);
    let lifted_path = lift_path_poly(n, i, j, k)
        .iter()
        .fold(Gf2Polynomial::zero(n), |acc, (key, a)| {
            &acc + &(a * &generator_poly(n, key))
        });
    let lifted_cubic = lift_edge_cubic(n, i, j)
        .iter()
        .fold(Gf2Polynomial::zero(n), |acc, (key, a)| {
            &acc + &(a * &generator_poly(n, key))
        });
    Ok(AppendixCheck {
        path_splits: path_splits && lifted_path == path_poly(n, i, j, k),
        edge_cubic_lifts: edge_cubic_lifts && lifted_cubic == edge_cubic(n, i, j),
        edge_times_var_lifts,
    })
}

fn generator_poly(n: usize, key: &GeneratorKey) -> Gf2Polynomial {
    match *key {
        GeneratorKey::Vertex(v) => vertex_poly(n, v),
        GeneratorKey::Edge(e) => edge_poly(n, e.u, e.v),
    }
}
