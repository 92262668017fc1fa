//! Nullstellensatz linear algebra over GF(2).
//!
//! For a degree bound `d` the unknowns are the coefficients of every
//! multiplier `α_f`, one per pair (generator `f`, monomial `m` with
//! `deg m <= d`). Each unknown contributes the column `m · f`, indexed by
//! product monomials, and a certificate exists iff the constant monomial's
//! indicator lies in the column space.

mod census;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use census::{census, CensusConfig, CensusEntry, CensusFailure, CensusRow, CensusTable};

use crate::error::{domain, Error, Result};
use crate::gf2::{in_span_with_cap, payload_bytes, BitVector, Gf2Matrix, DEFAULT_MEM_CAP};
use crate::graph::{three_coloring, write_graph6, Coloring, Edge, Graph};
use crate::pathcover::{enumerate_paths2, path_cover_search, PathCover};
use crate::poly::{
    edge_cubic, lift_edge_cubic, lift_path_poly, path_poly, verify_certificate, BayerSystem, Certificate,
    Gf2Polynomial, Monomial,
};

/// Which multiplier monomials enter the linear system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Support {
    /// Every monomial of degree at most `d` for every generator.
    #[default]
    Full,
    /// Only monomials whose product with the generator has total degree
    /// divisible by 3. Every generator is homogeneous modulo 3 (`x^3 + 1`
    /// has degrees 3 and 0, edge polynomials degree 2) and `1` has degree 0,
    /// so projecting any certificate onto this support gives a certificate
    /// of no larger degree: existence is unchanged, the system is about a
    /// third of the size.
    Graded,
}

impl Support {
    fn admits(self, generator_degree: usize, multiplier_degree: usize) -> bool {
        match self {
            Support::Full => true,
            Support::Graded => (generator_degree + multiplier_degree).is_multiple_of(3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Cap on the bit payload of any one matrix.
    pub mem_cap: u64,
    pub support: Support,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mem_cap: DEFAULT_MEM_CAP,
            support: Support::Full,
        }
    }
}

/// The assembled degree-`d` system `A x = e_1`.
#[derive(Debug, Clone)]
pub struct CertificateSystem {
    pub degree: usize,
    /// Product monomials, ascending graded-lex; row `r` is `rows[r]`.
    pub rows: Vec<Monomial>,
    /// Unknowns ordered by multiplier monomial (graded-lex), then generator index.
    pub columns: Vec<(usize, Monomial)>,
    pub matrix: Gf2Matrix,
    /// Indicator of the constant monomial.
    pub rhs: BitVector,
}

impl CertificateSystem {
    pub fn build(sys: &BayerSystem, degree: usize, opts: &SearchOptions) -> Result<Self> {
        let n = sys.nvars();
        let gens = sys.generators();
        let multipliers = Monomial::all_up_to_degree(n, degree);
        let mut columns = Vec::new();
        for m in &multipliers {
            for (gi, g) in gens.iter().enumerate() {
                let gdeg = g.poly.degree().unwrap_or(0);
                if opts.support.admits(gdeg, m.degree()) {
                    columns.push((gi, m.clone()));
                }
            }
        }

        let mut index: HashMap<Monomial, usize> = HashMap::new();
        index.insert(Monomial::one(n), 0);
        for (gi, m) in &columns {
            for t in gens[*gi].poly.terms() {
                let len = index.len();
                index.entry(t.mul(m)).or_insert(len);
            }
        }
        let mut rows: Vec<Monomial> = index.keys().cloned().collect();
        rows.sort();
        for (r, m) in rows.iter().enumerate() {
            *index.get_mut(m).expect("row monomial") = r;
        }

        let bytes = payload_bytes(rows.len(), columns.len());
        if bytes > opts.mem_cap {
            return Err(Error::Capacity(format!(
                "degree-{degree} system on {n} variables has {} rows x {} columns ({bytes} bytes), \
                 memory cap is {}",
                rows.len(),
                columns.len(),
                opts.mem_cap
            )));
        }
        let mut matrix = Gf2Matrix::zeros_with_cap(rows.len(), columns.len(), opts.mem_cap)?;
        for (c, (gi, m)) in columns.iter().enumerate() {
            for t in gens[*gi].poly.terms() {
                matrix.flip(index[&t.mul(m)], c);
            }
        }
        let rhs = BitVector::from_ones(rows.len(), [index[&Monomial::one(n)]]);
        Ok(CertificateSystem {
            degree,
            rows,
            columns,
            matrix,
            rhs,
        })
    }

    /// Solves the system and reads the multipliers off a particular solution.
    pub fn solve(self, sys: &BayerSystem) -> Result<Option<Certificate>> {
        let CertificateSystem {
            degree,
            columns,
            matrix,
            rhs,
            ..
        } = self;
        let res = matrix.solve_owned(&rhs)?;
        let Some(x) = res.solution else {
            return Ok(None);
        };
        let mut cert = Certificate::new(sys.nvars(), degree);
        for c in x.ones() {
            let (gi, m) = &columns[c];
            cert.add_to(sys.generators()[*gi].key, &Gf2Polynomial::from_monomial(m.clone()));
        }
        Ok(Some(cert))
    }
}

fn checked(sys: &BayerSystem, cert: Certificate) -> Result<Certificate> {
    if verify_certificate(sys, &cert)? {
        Ok(cert)
    } else {
        Err(Error::Unsound(format!(
            "degree-{} certificate does not expand to 1",
            cert.degree
        )))
    }
}

/// A certificate with all multiplier degrees at most `degree`, if one
/// exists. The result has been expanded and checked symbolically.
pub fn certificate_search(g: &Graph, degree: usize, opts: &SearchOptions) -> Result<Option<Certificate>> {
    let sys = BayerSystem::new(g);
    let found = CertificateSystem::build(&sys, degree, opts)?.solve(&sys)?;
    found.map(|c| checked(&sys, c)).transpose()
}

/// Whether the constant polynomial 1 is a GF(2) combination of `polys`;
/// returns the indices of one combination.
pub fn one_in_span(polys: &[Gf2Polynomial], mem_cap: u64) -> Result<Option<Vec<usize>>> {
    let Some(nvars) = polys.first().map(Gf2Polynomial::nvars) else {
        return Ok(None);
    };
    let mut index: HashMap<&Monomial, usize> = HashMap::new();
    let one = Monomial::one(nvars);
    index.insert(&one, 0);
    for p in polys {
        for t in p.terms() {
            let len = index.len();
            index.entry(t).or_insert(len);
        }
    }
    let vectors: Vec<BitVector> = polys
        .iter()
        .map(|p| BitVector::from_ones(index.len(), p.terms().map(|t| index[t])))
        .collect();
    in_span_with_cap(&vectors, &BitVector::from_ones(index.len(), [0]), mem_cap)
}

/// A GF(2) combination of edge cubics and path polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Set4Combination {
    /// Edges `ij` whose edge cubic is used.
    pub edges: Vec<Edge>,
    /// Paths `(i, j, k)`, middle `j`, whose path polynomial is used.
    pub paths: Vec<(usize, usize, usize)>,
}

impl Set4Combination {
    pub fn sum(&self, n: usize) -> Gf2Polynomial {
        let mut s = Gf2Polynomial::zero(n);
        for e in &self.edges {
            s += &edge_cubic(n, e.u, e.v);
        }
        for &(i, j, k) in &self.paths {
            s += &path_poly(n, i, j, k);
        }
        s
    }

    /// Rewrites the combination over Bayer's generators (degree one).
    pub fn lift(&self, n: usize) -> Certificate {
        let mut cert = Certificate::new(n, 1);
        for e in &self.edges {
            for (key, a) in lift_edge_cubic(n, e.u, e.v) {
                cert.add_to(key, &a);
            }
        }
        for &(i, j, k) in &self.paths {
            for (key, a) in lift_path_poly(n, i, j, k) {
                cert.add_to(key, &a);
            }
        }
        cert
    }
}

/// Finds a combination of edge cubics and path polynomials equal to 1, one unknown
/// per edge and per unordered length-2 path.
pub fn set4_search(g: &Graph) -> Result<Option<Set4Combination>> {
    let n = g.n();
    let edges = g.edges();
    let paths = enumerate_paths2(g);
    let polys: Vec<Gf2Polynomial> = edges
        .iter()
        .map(|e| edge_cubic(n, e.u, e.v))
        .chain(paths.iter().map(|p| path_poly(n, p.a, p.mid, p.b)))
        .collect();
    let Some(picked) = one_in_span(&polys, DEFAULT_MEM_CAP)? else {
        return Ok(None);
    };
    let mut comb = Set4Combination::default();
    for i in picked {
        if i < edges.len() {
            comb.edges.push(edges[i]);
        } else {
            let p = paths[i - edges.len()];
            comb.paths.push((p.a, p.mid, p.b));
        }
    }
    Ok(Some(comb))
}

/// Degree-one search through the reduced family, lifted back to Bayer's
/// generators and checked.
pub fn degree1_search_fast(g: &Graph) -> Result<Option<Certificate>> {
    let Some(comb) = set4_search(g)? else {
        return Ok(None);
    };
    checked(&BayerSystem::new(g), comb.lift(g.n())).map(Some)
}

/// Degrees tried during escalation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    /// `1, 4, 7, ...`: the degree of a Bayer certificate over GF(2) is 1 mod 3.
    #[default]
    Mod3,
    /// Every degree `1..=cap`.
    All,
}

impl Schedule {
    pub fn degrees(self, cap: usize) -> Vec<usize> {
        match self {
            Schedule::Mod3 => (1..=cap).step_by(3).collect(),
            Schedule::All => (1..=cap).collect(),
        }
    }
}

impl std::str::FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mod3" => Ok(Schedule::Mod3),
            "all" => Ok(Schedule::All),
            other => Err(domain(format!("unknown schedule '{other}' (expected mod3 or all)"))),
        }
    }
}

/// Minimal certificate degree found, or the cap when none was.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NullaDegree {
    Exact(usize),
    AboveCap(usize),
}

impl std::fmt::Display for NullaDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NullaDegree::Exact(d) => write!(f, "{d}"),
            NullaDegree::AboveCap(_) => f.write_str("above-cap"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DegreeReport {
    pub n: usize,
    /// `None` past the graph6 size limit.
    pub graph6: Option<String>,
    pub colorable: bool,
    pub coloring: Option<Coloring>,
    /// Present exactly when the graph is not 3-colorable and the search ran.
    pub degree: Option<NullaDegree>,
    pub certificate: Option<Certificate>,
    /// A length-2 path cover, reported when the degree is 1.
    pub path_cover: Option<PathCover>,
    /// Degrees whose systems were solved, in order.
    pub tried: Vec<usize>,
    pub elapsed: Duration,
}

impl DegreeReport {
    fn start(g: &Graph) -> Self {
        DegreeReport {
            n: g.n(),
            graph6: write_graph6(g).ok(),
            colorable: false,
            coloring: None,
            degree: None,
            certificate: None,
            path_cover: None,
            tried: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }
}

/// A search that stopped early, with what was learned before it did.
#[derive(Debug, Clone)]
pub struct SearchFailure {
    pub partial: Box<DegreeReport>,
    pub error: Error,
}

impl std::fmt::Display for SearchFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.error)
    }
}

impl std::error::Error for SearchFailure {}

/// Escalating certificate search. 3-colorable graphs are settled by the
/// coloring oracle without touching the linear algebra.
pub fn nulla_degree(
    g: &Graph,
    cap: usize,
    schedule: Schedule,
    opts: &SearchOptions,
) -> std::result::Result<DegreeReport, SearchFailure> {
    let started = Instant::now();
    let mut report = DegreeReport::start(g);
    let fail = |mut partial: DegreeReport, error: Error| {
        partial.elapsed = started.elapsed();
        SearchFailure {
            partial: Box::new(partial),
            error,
        }
    };
    if cap < 1 {
        return Err(fail(report, domain("degree cap must be at least 1")));
    }
    match three_coloring(g) {
        Ok(Some(c)) => {
            report.colorable = true;
            report.coloring = Some(c);
            report.elapsed = started.elapsed();
            return Ok(report);
        }
        Ok(None) => {}
        Err(e) => return Err(fail(report, e)),
    }
    for d in schedule.degrees(cap) {
        report.tried.push(d);
        match certificate_search(g, d, opts) {
            Ok(Some(cert)) => {
                report.degree = Some(NullaDegree::Exact(d));
                report.certificate = Some(cert);
                break;
            }
            Ok(None) => {}
            Err(e) => return Err(fail(report, e)),
        }
    }
    match report.degree {
        Some(NullaDegree::Exact(1)) => match path_cover_search(g) {
            Ok(cover) => report.path_cover = cover,
            Err(e) => return Err(fail(report, e)),
        },
        None => report.degree = Some(NullaDegree::AboveCap(cap)),
        _ => {}
    }
    report.elapsed = started.elapsed();
    Ok(report)
}
