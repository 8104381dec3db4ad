//! Periodic `Z × Z` matrices with `a_{i,j} = a_{i+n,j+n}`.
//!
//! Entries are stored on the fundamental rows `1 ≤ i ≤ n`; every other entry
//! is a translate of one of these.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CorpusError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicMatrix {
    n: i64,
    /// `(i, j) -> a_{i,j}` for `1 ≤ i ≤ n`, nonzero values only.
    entries: BTreeMap<(i64, i64), u64>,
}

/// `{n, entries: [[i, j, value], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicMatrixDocument {
    pub n: i64,
    pub entries: Vec<(i64, i64, u64)>,
}

impl PeriodicMatrix {
    /// Entries may be given on any row; they are translated into the
    /// fundamental rows and summed.
    pub fn new(n: i64, entries: impl IntoIterator<Item = (i64, i64, u64)>) -> Result<Self, CorpusError> {
        if n < 1 {
            return Err(CorpusError::InvalidPeriodicMatrix(format!("period must be positive, got {n}")));
        }
        let mut m = Self {
            n,
            entries: BTreeMap::new(),
        };
        for (i, j, a) in entries {
            if a == 0 {
                continue;
            }
            let key = m.fundamental(i, j);
            *m.entries.entry(key).or_default() += a;
        }
        Ok(m)
    }

    /// Diagonal matrix with `a_{i,i} = diag[i-1]`.
    pub fn diagonal(diag: &[u64]) -> Result<Self, CorpusError> {
        Self::new(
            diag.len() as i64,
            diag.iter().enumerate().map(|(k, &a)| (k as i64 + 1, k as i64 + 1, a)),
        )
    }

    pub fn from_document(doc: &PeriodicMatrixDocument) -> Result<Self, CorpusError> {
        Self::new(doc.n, doc.entries.iter().copied())
    }

    pub fn to_document(&self) -> PeriodicMatrixDocument {
        PeriodicMatrixDocument {
            n: self.n,
            entries: self.entries.iter().map(|(&(i, j), &a)| (i, j, a)).collect(),
        }
    }

    fn fundamental(&self, i: i64, j: i64) -> (i64, i64) {
        let t = Integer::div_floor(&(i - 1), &self.n);
        (i - t * self.n, j - t * self.n)
    }

    pub fn period(&self) -> i64 {
        self.n
    }

    /// `a_{i,j}` for arbitrary integers.
    pub fn get(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&self.fundamental(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries on the fundamental rows.
    pub fn fundamental_entries(&self) -> impl Iterator<Item = (i64, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &a)| (i, j, a))
    }

    /// `r = Σ_{1 ≤ i ≤ n, j} a_{i,j}`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(i, j)| i == j)
    }

    /// `r(A)_i = Σ_j a_{i,j}` for `i = 1..n`.
    pub fn row_sums(&self) -> Vec<u64> {
        let mut r = vec![0; self.n as usize];
        for (&(i, _), &a) in &self.entries {
            r[(i - 1) as usize] += a;
        }
        r
    }

    /// `c(A)_j = Σ_i a_{i,j}` for `j = 1..n`.
    pub fn col_sums(&self) -> Vec<u64> {
        let mut c = vec![0; self.n as usize];
        for (&(_, j), &a) in &self.entries {
            c[(j - 1).mod_floor(&self.n) as usize] += a;
        }
        c
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.n, self.fundamental_entries().map(|(i, j, a)| (j, i, a)))
            .expect("period unchanged")
    }

    /// `d_A = Σ_{1 ≤ i ≤ n, i ≥ k, j < l} a_{i,j} a_{k,l}`.
    ///
    /// For fundamental entries `(i, j)` and `(k0, l0)`, the translates
    /// `(k0 + tn, l0 + tn)` with `k ≤ i` and `l > j` are exactly the integers
    /// `t` with `⌊(j - l0)/n⌋ < t ≤ ⌊(i - k0)/n⌋`, so each pair contributes
    /// a finite count.
    pub fn d_stat(&self) -> u64 {
        let mut total = 0u64;
        for (&(i, j), &a) in &self.entries {
            for (&(k0, l0), &b) in &self.entries {
                let upper = Integer::div_floor(&(i - k0), &self.n);
                let lower = Integer::div_floor(&(j - l0), &self.n);
                if upper > lower {
                    total += a * b * (upper - lower) as u64;
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_has_zero_d() {
        let a = PeriodicMatrix::diagonal(&[2, 1]).unwrap();
        assert_eq!(a.d_stat(), 0);
        assert_eq!(a.row_sums(), vec![2, 1]);
        assert_eq!(a.col_sums(), vec![2, 1]);
    }

    #[test]
    fn single_off_diagonal_entry() {
        let a = PeriodicMatrix::new(2, [(1, 2, 1)]).unwrap();
        assert_eq!(a.row_sums(), vec![1, 0]);
        assert_eq!(a.col_sums(), vec![0, 1]);
        assert_eq!(a.transpose().row_sums(), a.col_sums());
        assert_eq!(a.get(3, 4), 1);
        assert_eq!(a.get(-1, 0), 1);
        assert_eq!(a.get(2, 1), 0);
    }

    #[test]
    fn entries_are_folded_into_fundamental_rows() {
        let a = PeriodicMatrix::new(2, [(3, 5, 1), (1, 3, 2)]).unwrap();
        assert_eq!(a.fundamental_entries().collect::<Vec<_>>(), vec![(1, 3, 3)]);
        assert!(PeriodicMatrix::new(0, []).is_err());
    }

    #[test]
    fn document_round_trip() {
        let a = PeriodicMatrix::new(3, [(1, 4, 1), (2, -1, 2), (3, 3, 1)]).unwrap();
        let doc = a.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back: PeriodicMatrixDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(PeriodicMatrix::from_document(&back).unwrap(), a);
    }
}
