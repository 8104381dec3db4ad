//! Finite q-Schur algebras `S_q(n, r)` through the tensor-space model.
//!
//! The Hecke algebra of `S_r` (with `T_k^2 = (q - 1) T_k + q`, `q = v^2`)
//! acts on the right of `V^{⊗r}`, `V = span{e_1, .., e_n}`:
//!
//! * `e_i T_k = e_{i s_k}` if `i_k < i_{k+1}`,
//! * `e_i T_k = q e_i` if `i_k = i_{k+1}`,
//! * `e_i T_k = (q - 1) e_i + q e_{i s_k}` if `i_k > i_{k+1}`.
//!
//! The endomorphism basis `φ^A` is indexed by `n × n` nonnegative integer
//! matrices with entry sum `r`: with `μ` the column sums of `A` and `i_μ`
//! the weakly increasing word of weight `μ`, `φ^A` sends `e_{i_μ}` to the sum
//! of all `e_i` with `(i, i_μ)` in the `S_r`-orbit of pairs recorded by `A`
//! and kills the other weight spaces. Products are computed by evaluating the
//! composite on `e_{i_ν}` and reading one coefficient per orbit.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraElement, AlgebraParts, BasedAlgebra};
use crate::laurent::LaurentPoly;

use super::perm::Perm;
use super::CorpusError;

type Word = Vec<u8>;
type TensorVector = BTreeMap<Word, LaurentPoly>;

/// A composition `λ = (λ_1, .., λ_n)` of `r`.
pub type Composition = Vec<usize>;

/// An `n × n` matrix with nonnegative entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl OrbitMatrix {
    pub fn new(n: usize, entries: Vec<usize>) -> Self {
        assert_eq!(entries.len(), n * n);
        Self { n, entries }
    }

    pub fn diagonal(lambda: &[usize]) -> Self {
        let n = lambda.len();
        let mut entries = vec![0; n * n];
        for (i, &l) in lambda.iter().enumerate() {
            entries[i * n + i] = l;
        }
        Self { n, entries }
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn row_sums(&self) -> Composition {
        (0..self.n).map(|a| (0..self.n).map(|b| self.get(a, b)).sum()).collect()
    }

    pub fn col_sums(&self) -> Composition {
        (0..self.n).map(|b| (0..self.n).map(|a| self.get(a, b)).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        Self {
            n,
            entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || self.get(a, b) == 0))
    }

    /// `phi[2,0;0,0]`-style label.
    pub fn label(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|a| {
                (0..self.n)
                    .map(|b| self.get(a, b).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("phi[{}]", rows.join(";"))
    }

    /// The orbit of a pair of words.
    pub fn of_pair(n: usize, i: &[u8], j: &[u8]) -> Self {
        let mut entries = vec![0; n * n];
        for (a, b) in i.iter().zip(j) {
            entries[*a as usize * n + *b as usize] += 1;
        }
        Self { n, entries }
    }
}

/// All compositions of `r` into `n` parts, in lexicographically decreasing
/// order (so `(r, 0, ..)` comes first).
pub fn compositions(r: usize, n: usize) -> Vec<Composition> {
    fn rec(r: usize, n: usize, prefix: &mut Composition, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(r);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            rec(r - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(r, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The weakly increasing word `1^{λ_1} 2^{λ_2} ..` (0-based letters).
pub fn standard_word(lambda: &[usize]) -> Word {
    lambda
        .iter()
        .enumerate()
        .flat_map(|(a, &m)| std::iter::repeat_n(a as u8, m))
        .collect()
}

/// Words `i` with `(i, j)` in the orbit `A`: in each block of positions where
/// `j` takes the value `b`, the letters `a` appear `A[a][b]` times.
fn orbit_words(a: &OrbitMatrix, j: &[u8]) -> Vec<Word> {
    let n = a.n;
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = a.entries.clone();
    let mut word = vec![0u8; j.len()];
    fn rec(pos: usize, j: &[u8], n: usize, remaining: &mut [usize], word: &mut Word, out: &mut Vec<Word>) {
        if pos == j.len() {
            out.push(word.clone());
            return;
        }
        let b = j[pos] as usize;
        for a in 0..n {
            if remaining[a * n + b] > 0 {
                remaining[a * n + b] -= 1;
                word[pos] = a as u8;
                rec(pos + 1, j, n, remaining, word, out);
                remaining[a * n + b] += 1;
            }
        }
    }
    rec(0, j, n, &mut remaining, &mut word, &mut out);
    out
}

fn act_generator(vec: &TensorVector, k: usize, q: &LaurentPoly) -> TensorVector {
    let q_minus_one = q - &LaurentPoly::one();
    let mut out = TensorVector::new();
    let mut add = |w: Word, c: LaurentPoly| {
        if c.is_zero() {
            return;
        }
        let entry = out.entry(w.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            out.remove(&w);
        }
    };
    for (w, c) in vec {
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        match w[k].cmp(&w[k + 1]) {
            std::cmp::Ordering::Less => add(swapped, c.clone()),
            std::cmp::Ordering::Equal => add(w.clone(), c * q),
            std::cmp::Ordering::Greater => {
                add(w.clone(), c * &q_minus_one);
                add(swapped, c * q);
            }
        }
    }
    out
}

/// Generators `k_1, k_2, ..` (0-based positions) with
/// `e_i = e_{i_μ} T_{k_1} T_{k_2} ..`, each step swapping an ascent.
fn path_from_standard(word: &[u8]) -> Vec<usize> {
    let mut cur = word.to_vec();
    let mut swaps = Vec::new();
    // bubble sort by swapping descents; reversed, each step swaps an ascent
    loop {
        let Some(k) = (0..cur.len().saturating_sub(1)).find(|&k| cur[k] > cur[k + 1]) else {
            break;
        };
        cur.swap(k, k + 1);
        swaps.push(k);
    }
    swaps.reverse();
    swaps
}

/// Tensor-space model of `S_q(n, r)`.
#[derive(Clone, Debug)]
pub struct QSchur {
    n: usize,
    r: usize,
    matrices: Vec<OrbitMatrix>,
    q: LaurentPoly,
}

impl QSchur {
    /// Supported for `1 ≤ n ≤ 3`, `1 ≤ r ≤ 3`.
    pub fn new(n: usize, r: usize) -> Result<Self, CorpusError> {
        if !(1..=3).contains(&n) || !(1..=3).contains(&r) {
            return Err(CorpusError::UnsupportedQSchur { n, r });
        }
        let mut matrices: Vec<OrbitMatrix> = compositions(r, n * n)
            .into_iter()
            .map(|entries| OrbitMatrix::new(n, entries))
            .collect();
        // units first (in composition order), then the rest
        matrices.sort_by_key(|m| (!m.is_diagonal(), std::cmp::Reverse(m.entries.clone())));
        Ok(Self {
            n,
            r,
            matrices,
            q: LaurentPoly::monomial(1.into(), 2),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn matrices(&self) -> &[OrbitMatrix] {
        &self.matrices
    }

    /// `φ^A(e_i)` for a word `i` of weight `col(A)`; zero on other weights.
    pub fn apply_basis(&self, a: &OrbitMatrix, word: &[u8]) -> TensorVector {
        let mu = a.col_sums();
        let weight = weight_of(word, self.n);
        if weight != mu {
            return TensorVector::new();
        }
        let start = standard_word(&mu);
        let mut vec: TensorVector = orbit_words(a, &start)
            .into_iter()
            .map(|w| (w, LaurentPoly::one()))
            .collect();
        for k in path_from_standard(word) {
            vec = act_generator(&vec, k, &self.q);
        }
        vec
    }

    pub fn apply(&self, a: &OrbitMatrix, vec: &TensorVector) -> TensorVector {
        let mut out = TensorVector::new();
        for (w, c) in vec {
            for (w2, c2) in self.apply_basis(a, w) {
                let entry = out.entry(w2.clone()).or_default();
                entry.add_product(c, &c2);
                if entry.is_zero() {
                    out.remove(&w2);
                }
            }
        }
        out
    }

    /// Expands `φ^A φ^B` (apply `B` first) in the `φ` basis.
    pub fn product(&self, a: &OrbitMatrix, b: &OrbitMatrix) -> Result<Vec<(OrbitMatrix, LaurentPoly)>, CorpusError> {
        if a.col_sums() != b.row_sums() {
            return Ok(Vec::new());
        }
        let nu = b.col_sums();
        let start = standard_word(&nu);
        let image = self.apply(a, &self.apply_basis(b, &start));
        let mut out = Vec::new();
        let mut check = TensorVector::new();
        for c in &self.matrices {
            if c.row_sums() != a.row_sums() || c.col_sums() != nu {
                continue;
            }
            let words = orbit_words(c, &start);
            let coeff = image.get(&words[0]).cloned().unwrap_or_default();
            if coeff.is_zero() {
                continue;
            }
            for w in words {
                check.insert(w, coeff.clone());
            }
            out.push((c.clone(), coeff));
        }
        if check != image {
            return Err(CorpusError::NotInOrbitSpan {
                left: a.label(),
                right: b.label(),
            });
        }
        Ok(out)
    }

    pub fn to_algebra(&self) -> Result<BasedAlgebra, CorpusError> {
        let index: BTreeMap<&OrbitMatrix, usize> =
            self.matrices.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let unit_of = |lambda: &Composition| index[&OrbitMatrix::diagonal(lambda)];
        let rank = self.matrices.len();
        let mut products = vec![vec![AlgebraElement::zero(); rank]; rank];
        for (i, a) in self.matrices.iter().enumerate() {
            for (j, b) in self.matrices.iter().enumerate() {
                products[i][j] = AlgebraElement::from_terms(
                    self.product(a, b)?.into_iter().map(|(c, p)| (index[&c], p)),
                );
            }
        }
        let units: Vec<usize> = compositions(self.r, self.n).iter().map(unit_of).collect();
        Ok(BasedAlgebra::new(AlgebraParts {
            name: Some(format!("qschur-{}-{}", self.n, self.r)),
            labels: self.matrices.iter().map(OrbitMatrix::label).collect(),
            units,
            sector: self
                .matrices
                .iter()
                .map(|m| Some((unit_of(&m.row_sums()), unit_of(&m.col_sums()))))
                .collect(),
            involution: self.matrices.iter().map(|m| index[&m.transpose()]).collect(),
            products,
        })?)
    }
}

fn weight_of(word: &[u8], n: usize) -> Composition {
    let mut w = vec![0; n];
    for &a in word {
        w[a as usize] += 1;
    }
    w
}

/// `S_q(n, r)` with basis `φ^A`, units `φ_λ = φ^{diag(λ)}` and involution
/// `φ^A -> φ^{A^t}`.
pub fn gen_qschur(n: usize, r: usize) -> Result<BasedAlgebra, CorpusError> {
    QSchur::new(n, r)?.to_algebra()
}

/// Longest element of the Young subgroup `S_{λ_1} × .. × S_{λ_n}` of `S_r`:
/// reverses each block of consecutive positions.
pub fn young_longest_element(lambda: &[usize]) -> Perm {
    let r: usize = lambda.iter().sum();
    let mut one_line = Vec::with_capacity(r);
    let mut start = 0;
    for &m in lambda {
        one_line.extend((start..start + m).rev().map(|k| k as u8));
        start += m;
    }
    Perm::from_one_line(one_line).expect("block reversal is a permutation")
}

/// Result of the idempotence check for the basis element indexed by
/// `(λ, w_λ, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungIdempotent {
    pub composition: Composition,
    pub longest_word: Vec<u8>,
    pub basis_index: usize,
    pub label: String,
    pub idempotent: bool,
}

/// Builds `w_λ`, locates the basis element of the double coset
/// `S_λ w_λ S_λ` (the orbit of `(i_λ, i_λ w_λ)`, i.e. `φ_λ`), and verifies
/// `x * x = x` in `alg`.
pub fn young_longest_idempotent(lambda: &[usize], alg: &BasedAlgebra) -> Result<YoungIdempotent, CorpusError> {
    let n = lambda.len();
    let r: usize = lambda.iter().sum();
    if n == 0 || r == 0 {
        return Err(CorpusError::InvalidComposition(lambda.to_vec()));
    }
    let w = young_longest_element(lambda);
    let i_lambda = standard_word(lambda);
    let permuted: Word = (0..r).map(|k| i_lambda[w.apply(k)]).collect();
    let orbit = OrbitMatrix::of_pair(n, &i_lambda, &permuted);
    let label = orbit.label();
    let basis_index = alg
        .index_of(&label)
        .ok_or_else(|| CorpusError::InvalidComposition(lambda.to_vec()))?;
    let x = AlgebraElement::basis(basis_index);
    let idempotent = alg.multiply(&x, &x) == x;
    Ok(YoungIdempotent {
        composition: lambda.to_vec(),
        longest_word: super::perm::CoxeterElement::from_perm(&w).word().to_vec(),
        basis_index,
        label,
        idempotent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(2, 4).len(), 10);
        assert_eq!(compositions(3, 4).len(), 20);
    }

    #[test]
    fn path_reaches_word() {
        for word in [vec![1u8, 0, 1], vec![1, 1, 0], vec![0, 1, 1], vec![2, 0, 1]] {
            let mut sorted = word.clone();
            sorted.sort();
            let mut cur = sorted.clone();
            for k in path_from_standard(&word) {
                assert!(cur[k] < cur[k + 1], "each step swaps an ascent");
                cur.swap(k, k + 1);
            }
            assert_eq!(cur, word);
        }
    }

    #[test]
    fn hecke_action_satisfies_quadratic_relation() {
        let q = LaurentPoly::monomial(1.into(), 2);
        for word in [vec![0u8, 1], vec![1, 0], vec![1, 1]] {
            let v: TensorVector = [(word.clone(), LaurentPoly::one())].into_iter().collect();
            let once = act_generator(&v, 0, &q);
            let twice = act_generator(&once, 0, &q);
            // T^2 = (q-1) T + q
            let mut rhs = TensorVector::new();
            for (w, c) in &once {
                rhs.insert(w.clone(), c * &(&q - &LaurentPoly::one()));
            }
            let e = rhs.entry(word.clone()).or_default();
            *e += &q;
            rhs.retain(|_, c| !c.is_zero());
            assert_eq!(twice, rhs);
        }
    }

    #[test]
    fn qschur_2_2_has_rank_10() {
        let alg = gen_qschur(2, 2).unwrap();
        assert_eq!(alg.rank(), 10);
        assert_eq!(alg.units().len(), 3);
        assert!(alg.check_generalized_unit().passed);
    }

    #[test]
    fn unsupported_sizes() {
        assert!(gen_qschur(4, 2).is_err());
        assert!(gen_qschur(2, 0).is_err());
    }

    #[test]
    fn young_longest_elements() {
        assert_eq!(young_longest_element(&[2, 0]).one_line(), &[1, 0]);
        assert_eq!(young_longest_element(&[1, 1]).one_line(), &[0, 1]);
        assert_eq!(young_longest_element(&[2, 1]).one_line(), &[1, 0, 2]);
    }
}
