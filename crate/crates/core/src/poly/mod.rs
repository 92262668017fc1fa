//! Multivariate polynomials with GF(2) coefficients.
//!
//! A polynomial is a set of monomials: every coefficient is 1, adding a
//! monomial twice cancels it. Nothing is reduced modulo any ideal.

mod bayer;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

pub use bayer::{
    appendix_rewrite_identity, edge_cubic, edge_poly, edge_times_var, lift_edge_cubic, lift_path_poly, path_poly,
    prop21_system, verify_certificate, vertex_poly, AppendixCheck, BayerSystem, Certificate, Generator, GeneratorKey,
    Prop21Variant,
};

/// Exponent vector over `x_0..x_{n-1}`, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    /// `x_i^e`, with `x_i` standing for vertex `i`.
    pub fn var_pow(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    /// Product of variables listed with repetition, e.g. `[0, 0, 2]` is `x_0^2 x_2`.
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Monomial::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    /// All monomials in `nvars` variables of total degree exactly `d`, ascending.
    pub fn all_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
        fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u16>, i: usize, left: usize) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(cur.clone()));
                cur[i] = 0;
                return;
            }
            // Ascending grlex within a degree: small leading exponents first.
            for e in 0..=left {
                cur[i] = e as u16;
                rec(out, cur, i + 1, left - e);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(&mut out, &mut vec![0; nvars], 0, d);
        out
    }

    /// All monomials of total degree at most `d`, ascending.
    pub fn all_up_to_degree(nvars: usize, d: usize) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Monomial::all_of_degree(nvars, k)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial over GF(2) as a set of monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Polynomial {
    nvars: usize,
    terms: BTreeSet<Monomial>,
}

impl Gf2Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Gf2Polynomial {
            nvars,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Gf2Polynomial {
            nvars,
            terms: BTreeSet::from([m]),
        }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Gf2Polynomial::zero(nvars);
        for t in terms {
            p.toggle(t);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var_pow(nvars, i, 1))
    }

    /// Adds a single monomial (removing it if present).
    pub fn toggle(&mut self, m: Monomial) {
        assert_eq!(m.nvars(), self.nvars, "variable count mismatch");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(Monomial::is_one)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.last().map(Monomial::degree)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Gf2Polynomial {
        // Multiplying by a monomial is injective on monomials: no cancellation.
        Gf2Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn multiply(&self, other: &Gf2Polynomial) -> Gf2Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Gf2Polynomial::zero(self.nvars);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }
}

impl AddAssign<&Gf2Polynomial> for Gf2Polynomial {
    fn add_assign(&mut self, rhs: &Gf2Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for t in &rhs.terms {
            self.toggle(t.clone());
        }
    }
}

impl Add for &Gf2Polynomial {
    type Output = Gf2Polynomial;

    fn add(self, rhs: &Gf2Polynomial) -> Gf2Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &Gf2Polynomial {
    type Output = Gf2Polynomial;

    fn mul(self, rhs: &Gf2Polynomial) -> Gf2Polynomial {
        self.multiply(rhs)
    }
}

/// Terms in descending graded-lex order, e.g. `x0^2*x2 + x1^2*x2 + 1`.
impl fmt::Display for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Polynomial({self})")
    }
}
