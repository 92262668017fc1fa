//! Canonical forms and isomorphism-free enumeration of small graphs.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order [`canonical_form`] accepts (the bitstring must fit a `u128`;
/// the search is exponential on highly regular graphs well before that).
pub const MAX_CANON_VERTICES: usize = 16;

/// Largest order [`enumerate_nonisomorphic`] generates. Larger orders should
/// come from an external graph6 corpus.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Lexicographically minimal upper-triangle adjacency bitstring over the
/// relabelings of a graph.
///
/// The bitstring lists `(0,1), (0,2), (1,2), (0,3), ...` (graph6 column
/// order) with the first pair as the most significant bit. Minimization runs
/// over every relabeling that lists vertices by non-increasing degree; that
/// set is closed under isomorphism, so equal forms iff isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    /// The graph whose labeling realizes this form.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let len = self.n * self.n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    g.set(i, j, true);
                }
                k += 1;
            }
        }
        g
    }
}

struct Canon<'a> {
    g: &'a Graph,
    n: usize,
    /// Admissible vertices for each position.
    slot_class: Vec<&'a [usize]>,
    placed: Vec<usize>,
    used: Vec<bool>,
    chunks: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Canon<'_> {
    fn column(&self, p: usize, v: usize) -> u64 {
        self.placed[..p]
            .iter()
            .fold(0, |acc, &w| acc << 1 | self.g.has_edge(w, v) as u64)
    }

    fn dfs(&mut self, p: usize) {
        if p == self.n {
            if self.best.as_ref().is_none_or(|b| self.chunks < *b) {
                self.best = Some(self.chunks.clone());
            }
            return;
        }
        let class = self.slot_class[p];
        for &v in class {
            if self.used[v] {
                continue;
            }
            let chunk = self.column(p, v);
            self.chunks.push(chunk);
            // `best` shrinks during the search, so compare the whole prefix.
            let prune = self.best.as_ref().is_some_and(|b| self.chunks[..] > b[..=p]);
            if !prune {
                self.used[v] = true;
                self.placed.push(v);
                self.dfs(p + 1);
                self.placed.pop();
                self.used[v] = false;
            }
            self.chunks.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::Capacity(format!(
            "canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Runs of equal degree.
    let mut classes: Vec<&[usize]> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || g.degree(by_degree[i]) != g.degree(by_degree[start]) {
            classes.push(&by_degree[start..i]);
            start = i;
        }
    }
    let slot_class = classes.iter().flat_map(|c| std::iter::repeat_n(*c, c.len())).collect();
    let mut search = Canon {
        g,
        n,
        slot_class,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        chunks: Vec::with_capacity(n),
        best: None,
    };
    search.dfs(0);
    let chunks = search.best.expect("at least one labeling");
    let bits = chunks
        .iter()
        .enumerate()
        .fold(0u128, |acc, (p, &c)| acc << p | c as u128);
    Ok(CanonicalForm { n, bits })
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical form and labeled canonically.
///
/// Order `k` classes come from adding a vertex with every possible
/// neighborhood to each order `k - 1` representative: deleting the last
/// vertex of any graph leaves something isomorphic to a representative.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices; \
             supply order-{n} graphs as a graph6 corpus instead"
        )));
    }
    let mut level = vec![Graph::empty(0)];
    for k in 0..n {
        let mut forms = BTreeSet::new();
        for g in &level {
            for mask in 0u32..1 << k {
                let h = g.extended((0..k).filter(|&v| mask >> v & 1 == 1))?;
                forms.insert(canonical_form(&h)?);
            }
        }
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, moser_spindle, path, wheel};

    /// Independent canonical form: minimum over all n! relabelings.
    fn brute_form(g: &Graph) -> u128 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u128::MAX;
        loop {
            let mut bits = 0u128;
            for j in 1..n {
                for i in 0..j {
                    // position i holds vertex perm[i]
                    bits = bits << 1 | g.has_edge(perm[i], perm[j]) as u128;
                }
            }
            best = best.min(bits);
            if !next_permutation(&mut perm) {
                return best;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn form_is_invariant_and_realizable() {
        let m = moser_spindle();
        let f = canonical_form(&m).unwrap();
        let h = m.permuted(&[3, 6, 1, 0, 5, 2, 4]).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), f);
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        assert_ne!(canonical_form(&wheel(6).unwrap()).unwrap(), f);
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }

    #[test]
    fn isomorphism_classes_match_full_permutation_search() {
        // All 2^10 labeled graphs on 5 vertices.
        let mut fast = BTreeSet::new();
        let mut slow = BTreeSet::new();
        for mask in 0u32..1 << 10 {
            let mut edges = vec![];
            let mut k = 0;
            for j in 1..5 {
                for i in 0..j {
                    if mask >> k & 1 == 1 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(5, edges).unwrap();
            fast.insert(canonical_form(&g).unwrap());
            slow.insert(brute_form(&g));
        }
        assert_eq!(fast.len(), 34);
        assert_eq!(slow.len(), 34);
    }

    #[test]
    fn enumeration_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            let gs = enumerate_nonisomorphic(n).unwrap();
            assert_eq!(gs.len(), count, "order {n}");
            let brute: BTreeSet<u128> = gs.iter().map(brute_form).collect();
            assert_eq!(brute.len(), count, "pairwise non-isomorphic at order {n}");
        }
        assert!(matches!(enumerate_nonisomorphic(8), Err(Error::Capacity(_))));
    }

    #[test]
    fn contains_expected_members() {
        let g4 = enumerate_nonisomorphic(4).unwrap();
        let forms: BTreeSet<_> = g4.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.contains(&canonical_form(&complete(4)).unwrap()));
        assert!(forms.contains(&canonical_form(&path(4)).unwrap()));
    }
}
