//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are stored as runs of `u64` words; bits past `cols` in the last word
//! of a row are always zero. Elimination works on a private copy (or on a
//! matrix handed over by value) and uses the topmost row with a one in the
//! leftmost unprocessed column as pivot, so results are reproducible.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on a matrix's bit payload: 1 GiB.
pub const DEFAULT_MEM_CAP: u64 = 1 << 30;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Vector with ones exactly at `ones`.
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVector::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, on: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let m = 1u64 << (i % 64);
        if on {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| crate::graph::BitIter(w).map(move |b| wi * 64 + b))
    }

    pub fn xor_assign(&mut self, other: &BitVector) -> Result<()> {
        if other.len != self.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVector({s})")
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

/// Outcome of [`Gf2Matrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub feasible: bool,
    /// A particular solution (free variables zero) when feasible.
    pub solution: Option<BitVector>,
    pub rank: usize,
}

/// Bytes needed for the bit payload of a `rows x cols` matrix.
pub fn payload_bytes(rows: usize, cols: usize) -> u64 {
    rows as u64 * words_for(cols).max(1) as u64 * 8
}

impl Gf2Matrix {
    /// Zero matrix under the default memory cap.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::zeros_with_cap(rows, cols, DEFAULT_MEM_CAP)
    }

    pub fn zeros_with_cap(rows: usize, cols: usize, cap: u64) -> Result<Self> {
        let bytes = payload_bytes(rows, cols);
        if bytes > cap {
            return Err(Error::Capacity(format!(
                "{rows} x {cols} GF(2) matrix needs {bytes} bytes, cap is {cap}"
            )));
        }
        let stride = words_for(cols).max(1);
        Ok(Gf2Matrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n).expect("identity fits the default cap");
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Matrix whose rows are `rows`; all must share a length.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        let mut m = Self::zeros(rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            m.row_mut(i)[..r.words.len()].copy_from_slice(&r.words);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.bits[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, on: bool) {
        assert!(r < self.rows && c < self.cols);
        let m = 1u64 << (c % 64);
        let w = &mut self.bits[r * self.stride + c / 64];
        if on {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.bits[r * self.stride + c / 64] ^= 1u64 << (c % 64);
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.bits[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVector {
        let mut v = BitVector::zeros(self.cols);
        let n = v.words.len();
        v.words
            .copy_from_slice(&self.bits[r * self.stride..r * self.stride + n]);
        v
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows).expect("transpose of an allocated matrix");
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `A x` for a vector of length `cols`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let row = &self.bits[r * self.stride..(r + 1) * self.stride];
            let parity = row
                .iter()
                .zip(&x.words)
                .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones());
            out.set(r, parity & 1 == 1);
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; `rhs` (one bit per row) follows
    /// the row operations. Returns the pivot column of each pivot row.
    fn reduce(&mut self, mut rhs: Option<&mut BitVector>) -> Vec<usize> {
        let stride = self.stride;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (w, m) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (r..self.rows).find(|&p| self.bits[p * stride + w] & m != 0) else {
                continue;
            };
            if p != r {
                for k in w..stride {
                    self.bits.swap(p * stride + k, r * stride + k);
                }
                if let Some(b) = rhs.as_deref_mut() {
                    let (bp, br) = (b.get(p), b.get(r));
                    b.set(p, br);
                    b.set(r, bp);
                }
            }
            // Row r is zero left of column c, so words before w can be skipped.
            let (head, tail) = self.bits.split_at_mut(r * stride);
            let (pivot, tail) = tail.split_at_mut(stride);
            let pivot = &pivot[w..];
            let carry = rhs.as_deref().is_some_and(|b| b.get(r));
            let clear = |row: &mut [u64], q: usize, rhs: &mut Option<&mut BitVector>| {
                if row[w] & m != 0 {
                    for (a, b) in row[w..].iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                    if carry {
                        if let Some(b) = rhs.as_deref_mut() {
                            b.flip(q);
                        }
                    }
                }
            };
            for (q, row) in head.chunks_exact_mut(stride).enumerate() {
                clear(row, q, &mut rhs);
            }
            for (q, row) in tail.chunks_exact_mut(stride).enumerate() {
                clear(row, r + 1 + q, &mut rhs);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce(None).len()
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &BitVector) -> Result<SolveResult> {
        self.clone().solve_owned(b)
    }

    /// [`Gf2Matrix::solve`] reusing this matrix as the elimination workspace.
    pub fn solve_owned(mut self, b: &BitVector) -> Result<SolveResult> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut rhs = b.clone();
        let pivots = self.reduce(Some(&mut rhs));
        let rank = pivots.len();
        let feasible = (rank..self.rows).all(|q| !rhs.get(q));
        let solution = feasible.then(|| {
            let mut x = BitVector::zeros(self.cols);
            for (r, &c) in pivots.iter().enumerate() {
                x.set(c, rhs.get(r));
            }
            x
        });
        Ok(SolveResult {
            feasible,
            solution,
            rank,
        })
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Whether `target` is a GF(2) combination of `vectors`; on success returns
/// the indices of one such combination.
pub fn in_span(vectors: &[BitVector], target: &BitVector) -> Result<Option<Vec<usize>>> {
    in_span_with_cap(vectors, target, DEFAULT_MEM_CAP)
}

pub fn in_span_with_cap(vectors: &[BitVector], target: &BitVector, cap: u64) -> Result<Option<Vec<usize>>> {
    let len = target.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != len) {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    // One column per vector.
    let mut a = Gf2Matrix::zeros_with_cap(len, vectors.len(), cap)?;
    for (c, v) in vectors.iter().enumerate() {
        for r in v.ones() {
            a.set(r, c, true);
        }
    }
    let res = a.solve_owned(target)?;
    let witness = res.solution.map(|x| x.ones().collect::<Vec<_>>());
    if let Some(w) = &witness {
        let mut sum = BitVector::zeros(len);
        for &i in w {
            sum.xor_assign(&vectors[i])?;
        }
        assert_eq!(&sum, target, "span witness does not re-sum to the target");
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(rows, cols).unwrap();
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.gen_bool(0.5));
            }
        }
        m
    }

    /// Rank as log2 of the row-space size, by enumerating all row subsets.
    fn brute_rank(m: &Gf2Matrix) -> usize {
        let rows: Vec<u64> = (0..m.rows()).map(|r| m.row(r).words()[0]).collect();
        let mut space = std::collections::HashSet::new();
        for mask in 0u32..1 << rows.len() {
            let v = (0..rows.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0, |a, i| a ^ rows[i]);
            space.insert(v);
        }
        space.len().trailing_zeros() as usize
    }

    #[test]
    fn trivial_ranks() {
        assert_eq!(Gf2Matrix::identity(5).rank(), 5);
        assert_eq!(Gf2Matrix::zeros(4, 7).unwrap().rank(), 0);
        assert_eq!(Gf2Matrix::zeros(0, 0).unwrap().rank(), 0);
    }

    #[test]
    fn rank_matches_row_space_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let m = random_matrix(&mut rng, 6, 6);
            let before = m.clone();
            assert_eq!(m.rank(), brute_rank(&m));
            assert_eq!(m, before, "rank must not modify its input");
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn identity_and_zero_systems() {
        let b = BitVector::from_bools(&[true, false, true, true]);
        let r = Gf2Matrix::identity(4).solve(&b).unwrap();
        assert!(r.feasible);
        assert_eq!(r.solution.unwrap(), b);
        let z = Gf2Matrix::zeros(4, 4).unwrap().solve(&b).unwrap();
        assert!(!z.feasible && z.solution.is_none() && z.rank == 0);
        assert!(matches!(
            Gf2Matrix::identity(3).solve(&b),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn solve_matches_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let a = random_matrix(&mut rng, 8, 10);
            let b = BitVector::from_bools(&(0..8).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let exists = (0u32..1 << 10).any(|mask| {
                let x = BitVector::from_ones(10, (0..10).filter(|&i| mask >> i & 1 == 1));
                a.mul_vec(&x).unwrap() == b
            });
            let r = a.solve(&b).unwrap();
            assert_eq!(r.feasible, exists);
            if let Some(x) = r.solution {
                assert_eq!(a.mul_vec(&x).unwrap(), b);
            }
            assert_eq!(a.solve(&b).unwrap(), a.solve(&b).unwrap());
        }
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 90, 150);
        let x = BitVector::from_bools(&(0..150).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
        let b = a.mul_vec(&x).unwrap();
        let r = a.solve(&b).unwrap();
        assert!(r.feasible);
        assert_eq!(a.mul_vec(&r.solution.unwrap()).unwrap(), b);
        assert_eq!(r.rank, a.transpose().rank());
    }

    #[test]
    fn span_membership() {
        let v = BitVector::from_bools(&[true, false, true]);
        assert_eq!(in_span(std::slice::from_ref(&v), &v).unwrap(), Some(vec![0]));
        assert_eq!(in_span(&[], &v).unwrap(), None);
        assert_eq!(in_span(&[], &BitVector::zeros(3)).unwrap(), Some(vec![]));
        assert!(in_span(&[BitVector::zeros(2)], &v).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let vs: Vec<BitVector> = (0..5)
                .map(|_| BitVector::from_bools(&(0..12).map(|_| rng.gen_bool(0.3)).collect::<Vec<_>>()))
                .collect();
            let t = BitVector::from_bools(&(0..12).map(|_| rng.gen_bool(0.3)).collect::<Vec<_>>());
            let exists = (0u32..32).any(|mask| {
                let mut s = BitVector::zeros(12);
                for i in (0..5).filter(|&i| mask >> i & 1 == 1) {
                    s.xor_assign(&vs[i]).unwrap();
                }
                s == t
            });
            assert_eq!(in_span(&vs, &t).unwrap().is_some(), exists);
        }
    }

    #[test]
    fn memory_guardrail() {
        let e = Gf2Matrix::zeros_with_cap(1000, 1000, 1024).unwrap_err();
        assert!(matches!(e, Error::Capacity(_)));
        assert!(Gf2Matrix::zeros_with_cap(10, 64, 80).is_ok());
    }

    #[test]
    fn appending_consistent_zero_row_keeps_feasibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = random_matrix(&mut rng, 6, 8);
            let x = BitVector::from_bools(&(0..8).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let b = a.mul_vec(&x).unwrap();
            let mut rows: Vec<BitVector> = (0..6).map(|r| a.row(r)).collect();
            rows.push(BitVector::zeros(8));
            let a2 = Gf2Matrix::from_rows(&rows).unwrap();
            let mut b2 = BitVector::zeros(7);
            for i in b.ones() {
                b2.set(i, true);
            }
            assert!(a2.solve(&b2).unwrap().feasible);
        }
    }
}
