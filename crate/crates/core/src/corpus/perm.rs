//! Symmetric groups as Coxeter groups of type A.

use std::collections::HashMap;
use std::fmt;

/// A permutation of `{0, .., n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_one_line(values: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; values.len()];
        for &v in &values {
            let slot = seen.get_mut(v as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(values))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    /// Number of inversions (Coxeter length).
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&k| self.0[k as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `s_i ∘ self` for the simple transposition `s_i = (i-1, i)`, 1-based `i`.
    pub fn left_mul_gen(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// `self ∘ s_i`.
    pub fn right_mul_gen(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Perm(w)
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Bruhat order by the tableau criterion: `x ≤ w` iff for every prefix
    /// length `i` and threshold `k`, `#{j ≤ i : x(j) ≥ k} ≤ #{j ≤ i : w(j) ≥ k}`.
    pub fn bruhat_le(&self, w: &Perm) -> bool {
        let n = self.0.len();
        assert_eq!(n, w.0.len(), "permutations of different degree");
        for i in 0..n {
            for k in 0..n as u8 {
                let cx = self.0[..=i].iter().filter(|&&v| v >= k).count();
                let cw = w.0[..=i].iter().filter(|&&v| v >= k).count();
                if cx > cw {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// An element of `S_{m+1}` stored as its lexicographically smallest reduced
/// word in the generators `s_1, .., s_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CoxeterElement {
    word: Vec<u8>,
}

impl CoxeterElement {
    pub fn identity() -> Self {
        Self { word: Vec::new() }
    }

    /// Normal form of a permutation.
    pub fn from_perm(w: &Perm) -> Self {
        let mut word = Vec::new();
        let mut cur = w.clone();
        // lexmin reduced word: peel off the smallest left descent each time
        while let Some(i) = (1..cur.degree()).find(|&i| cur.has_left_descent(i)) {
            word.push(i as u8);
            cur = cur.left_mul_gen(i);
        }
        Self { word }
    }

    /// Reduces an arbitrary word to normal form.
    pub fn from_word(word: &[u8], degree: usize) -> Option<Self> {
        if word.iter().any(|&i| i == 0 || i as usize >= degree) {
            return None;
        }
        Some(Self::from_perm(&word_to_perm(word, degree)))
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn to_perm(&self, degree: usize) -> Perm {
        word_to_perm(&self.word, degree)
    }

    /// `e` for the identity, otherwise e.g. `s1s2s1`.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|i| format!("s{i}")).collect()
    }
}

fn word_to_perm(word: &[u8], degree: usize) -> Perm {
    word.iter()
        .fold(Perm::identity(degree), |acc, &i| acc.right_mul_gen(i as usize))
}

/// `S_{m+1}` with all elements enumerated by (length, normal form).
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    generators: usize,
    elements: Vec<Perm>,
    words: Vec<CoxeterElement>,
    lengths: Vec<usize>,
    index: HashMap<Perm, usize>,
    left_gen: Vec<Vec<usize>>,
    right_gen: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl SymmetricGroup {
    /// The group generated by `s_1, .., s_m`, i.e. `S_{m+1}`.
    pub fn new(generators: usize) -> Self {
        let degree = generators + 1;
        let mut elements = all_permutations(degree);
        let mut keyed: Vec<(usize, CoxeterElement, Perm)> = elements
            .drain(..)
            .map(|p| (p.length(), CoxeterElement::from_perm(&p), p))
            .collect();
        keyed.sort();
        let lengths = keyed.iter().map(|k| k.0).collect();
        let words = keyed.iter().map(|k| k.1.clone()).collect();
        let elements: Vec<Perm> = keyed.into_iter().map(|k| k.2).collect();
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut left_gen = vec![Vec::new(); generators + 1];
        let mut right_gen = vec![Vec::new(); generators + 1];
        for i in 1..=generators {
            left_gen[i] = elements.iter().map(|w| index[&w.left_mul_gen(i)]).collect();
            right_gen[i] = elements.iter().map(|w| index[&w.right_mul_gen(i)]).collect();
        }
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        Self {
            generators,
            elements,
            words,
            lengths,
            index,
            left_gen,
            right_gen,
            inverse,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn degree(&self) -> usize {
        self.generators + 1
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn perm(&self, w: usize) -> &Perm {
        &self.elements[w]
    }

    pub fn element(&self, w: usize) -> &CoxeterElement {
        &self.words[w]
    }

    pub fn label(&self, w: usize) -> String {
        self.words[w].label()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `s_i w`.
    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left_gen[i][w]
    }

    /// Index of `w s_i`.
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right_gen[i][w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn has_left_descent(&self, i: usize, w: usize) -> bool {
        self.lengths[self.left_mul(i, w)] < self.lengths[w]
    }

    pub fn bruhat_le(&self, x: usize, w: usize) -> bool {
        self.elements[x].bruhat_le(&self.elements[w])
    }

    /// Index of the product of the words' generators, read left to right.
    pub fn from_word(&self, word: &[u8]) -> usize {
        word.iter().fold(self.identity(), |acc, &i| self.right_mul(acc, i as usize))
    }

    /// Index of the element with the given normal-form label.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        (0..self.order()).find(|&w| self.label(w) == label)
    }
}

fn all_permutations(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm(prefix.clone()));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_normal_forms() {
        let g = SymmetricGroup::new(2);
        let labels: Vec<String> = (0..g.order()).map(|w| g.label(w)).collect();
        assert_eq!(labels, ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
        let w0 = g.index_of_label("s1s2s1").unwrap();
        assert_eq!(g.from_word(&[2, 1, 2]), w0);
        assert_eq!(g.inverse(g.index_of_label("s1s2").unwrap()), g.index_of_label("s2s1").unwrap());
    }

    #[test]
    fn group_orders_and_lengths() {
        for (m, order, top) in [(1, 2, 1), (2, 6, 3), (3, 24, 6), (4, 120, 10)] {
            let g = SymmetricGroup::new(m);
            assert_eq!(g.order(), order);
            assert_eq!(g.length(order - 1), top);
            for w in 0..g.order() {
                assert_eq!(g.element(w).length(), g.length(w));
                assert_eq!(g.from_word(g.element(w).word()), w);
            }
        }
    }

    #[test]
    fn bruhat_matches_subword_property() {
        // x ≤ w iff some subword of a reduced word of w is a reduced word of x
        let g = SymmetricGroup::new(3);
        for w in 0..g.order() {
            let word = g.element(w).word().to_vec();
            let mut below = vec![false; g.order()];
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<u8> = word
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &s)| s)
                    .collect();
                below[g.from_word(&sub)] = true;
            }
            for (x, &expected) in below.iter().enumerate() {
                assert_eq!(g.bruhat_le(x, w), expected, "x={} w={}", g.label(x), g.label(w));
            }
        }
    }

    #[test]
    fn normal_form_of_arbitrary_word() {
        let e = CoxeterElement::from_word(&[1, 1, 2], 3).unwrap();
        assert_eq!(e.label(), "s2");
        assert!(CoxeterElement::from_word(&[3], 3).is_none());
    }
}
