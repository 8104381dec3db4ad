//! Representation rings of products of general linear groups.
//!
//! An irreducible representation of `GL_{k1} × .. × GL_{km}` is labelled by one
//! dominant weight per factor. Tensor products are decomposed factorwise with
//! Littlewood–Richardson coefficients after twisting by a power of the
//! determinant so that both weights become partitions.

pub mod jring;
pub mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::genmatrix::CommutativeRing;

pub use jring::{JRing, JRingElement};
pub use lr::{lr_coefficient, partitions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("label {label} does not match group shape {shape:?}")]
    ShapeMismatch { label: String, shape: Vec<usize> },
    #[error("cannot parse weight `{0}`")]
    Parse(String),
    #[error("index ({0}, {1}) outside 1..={2}")]
    IndexOutOfRange(usize, usize, usize),
}

/// A dominant weight of `GL_k`: a weakly decreasing integer tuple of length `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GLWeight(Vec<i64>);

impl GLWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, RepError> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(RepError::NotDominant(entries));
        }
        Ok(GLWeight(entries))
    }

    pub fn trivial(k: usize) -> Self {
        GLWeight(vec![0; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The weight of the dual representation: reversed and negated.
    pub fn dual(&self) -> Self {
        GLWeight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Weyl dimension formula `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
    pub fn dimension(&self) -> BigInt {
        let k = self.0.len();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k {
            for j in i + 1..k {
                num *= self.0[i] - self.0[j] + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        num / den
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for GLWeight {
    type Err = RepError;

    /// Accepts `1,0`, `(1,0)` or the empty string for `GL_0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(GLWeight(Vec::new()));
        }
        let entries = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| RepError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        GLWeight::new(entries)
    }
}

/// An irreducible representation of a product of general linear groups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrrLabel(Vec<GLWeight>);

impl IrrLabel {
    pub fn new(factors: Vec<GLWeight>) -> Self {
        IrrLabel(factors)
    }

    pub fn single(w: GLWeight) -> Self {
        IrrLabel(vec![w])
    }

    pub fn trivial(shape: &[usize]) -> Self {
        IrrLabel(shape.iter().map(|&k| GLWeight::trivial(k)).collect())
    }

    pub fn factors(&self) -> &[GLWeight] {
        &self.0
    }

    pub fn shape(&self) -> Vec<usize> {
        self.0.iter().map(GLWeight::rank).collect()
    }

    pub fn matches(&self, shape: &[usize]) -> bool {
        self.shape() == shape
    }

    pub fn dual(&self) -> Self {
        IrrLabel(self.0.iter().map(GLWeight::dual).collect())
    }

    pub fn dimension(&self) -> BigInt {
        self.0.iter().map(GLWeight::dimension).product()
    }
}

/// Same as [`dual_weight`] on a label.
pub fn dual_weight(s: &IrrLabel) -> IrrLabel {
    s.dual()
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

impl FromStr for IrrLabel {
    type Err = RepError;

    /// Factors separated by `|` or `;`, e.g. `1,0|2` or `[(1,0)|(2)]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        inner
            .split(['|', ';'])
            .map(GLWeight::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(IrrLabel)
    }
}

/// A virtual representation: finitely many irreducibles with nonzero integer
/// multiplicities.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct RepRingElement(BTreeMap<IrrLabel, BigInt>);

impl RepRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn irreducible(s: IrrLabel) -> Self {
        Self::term(s, BigInt::one())
    }

    pub fn term(s: IrrLabel, c: BigInt) -> Self {
        let mut x = Self::zero();
        x.add_term(s, &c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IrrLabel, &BigInt)> + '_ {
        self.0.iter()
    }

    pub fn multiplicity(&self, s: &IrrLabel) -> BigInt {
        self.0.get(s).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: IrrLabel, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(s).or_default();
        *entry += c;
        if entry.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.0 {
            out.add_term(s.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        RepRingElement(self.0.iter().map(|(s, c)| (s.clone(), -c)).collect())
    }

    pub fn dual(&self) -> Self {
        RepRingElement(self.0.iter().map(|(s, c)| (s.dual(), c.clone())).collect())
    }

    /// Total dimension of the virtual representation.
    pub fn dimension(&self) -> BigInt {
        self.0.iter().map(|(s, c)| s.dimension() * c).sum()
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(s, c)| format!("{c}*{s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for RepRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|(s, c)| (s.to_string(), c.to_string())))
    }
}

/// Tensor product of two irreducible `GL_k` representations.
pub fn gl_tensor(a: &GLWeight, b: &GLWeight) -> Vec<(GLWeight, u64)> {
    let k = a.rank();
    assert_eq!(k, b.rank(), "weights of different rank");
    if k == 0 {
        return vec![(GLWeight(Vec::new()), 1)];
    }
    let m = 0.max(-a.0[k - 1]).max(-b.0[k - 1]);
    let to_partition = |w: &GLWeight| lr::trim(&w.0.iter().map(|&x| (x + m) as usize).collect::<Vec<_>>());
    let (pa, pb) = (to_partition(a), to_partition(b));
    let total = lr::size(&pa) + lr::size(&pb);
    let mut out = Vec::new();
    for nu in lr::partitions(total, k) {
        if !lr::contains(&nu, &pa) || !lr::contains(&nu, &pb) {
            continue;
        }
        let c = lr_coefficient(&pa, &pb, &nu);
        if c > 0 {
            let entries = (0..k).map(|i| nu.get(i).copied().unwrap_or(0) as i64 - 2 * m).collect();
            out.push((GLWeight(entries), c));
        }
    }
    out.sort();
    out
}

/// The representation ring `R(GL_{k1} × .. × GL_{km})` for a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRing {
    shape: Vec<usize>,
}

impl RepRing {
    pub fn new(shape: Vec<usize>) -> Self {
        Self { shape }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn trivial(&self) -> IrrLabel {
        IrrLabel::trivial(&self.shape)
    }

    pub fn check_label(&self, s: &IrrLabel) -> Result<(), RepError> {
        if s.matches(&self.shape) {
            Ok(())
        } else {
            Err(RepError::ShapeMismatch { label: s.to_string(), shape: self.shape.clone() })
        }
    }

    pub fn check_element(&self, x: &RepRingElement) -> Result<(), RepError> {
        x.0.keys().try_for_each(|s| self.check_label(s))
    }

    /// Decomposes `s ⊗ s'` into irreducibles, factor by factor.
    pub fn tensor_decompose(&self, s: &IrrLabel, s2: &IrrLabel) -> Result<RepRingElement, RepError> {
        self.check_label(s)?;
        self.check_label(s2)?;
        let mut acc: Vec<(Vec<GLWeight>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for (a, b) in s.0.iter().zip(&s2.0) {
            let factor = gl_tensor(a, b);
            acc = acc
                .into_iter()
                .flat_map(|(prefix, c)| {
                    factor.iter().map(move |(w, m)| {
                        let mut p = prefix.clone();
                        p.push(w.clone());
                        (p, &c * BigInt::from(*m))
                    })
                })
                .collect();
        }
        let mut out = RepRingElement::zero();
        for (factors, c) in acc {
            out.add_term(IrrLabel(factors), &c);
        }
        Ok(out)
    }

    pub fn multiply(&self, x: &RepRingElement, y: &RepRingElement) -> Result<RepRingElement, RepError> {
        let mut out = RepRingElement::zero();
        for (s, a) in &x.0 {
            for (t, b) in &y.0 {
                let ab = a * b;
                for (u, c) in self.tensor_decompose(s, t)?.0 {
                    out.add_term(u, &(&ab * c));
                }
            }
        }
        Ok(out)
    }
}

/// Free function form of [`RepRing::tensor_decompose`].
pub fn tensor_decompose(s: &IrrLabel, s2: &IrrLabel, shape: &[usize]) -> Result<RepRingElement, RepError> {
    RepRing::new(shape.to_vec()).tensor_decompose(s, s2)
}

impl CommutativeRing for RepRing {
    type Elem = RepRingElement;

    fn zero(&self) -> RepRingElement {
        RepRingElement::zero()
    }

    fn one(&self) -> RepRingElement {
        RepRingElement::irreducible(self.trivial())
    }

    fn add(&self, a: &RepRingElement, b: &RepRingElement) -> RepRingElement {
        a.add(b)
    }

    fn neg(&self, a: &RepRingElement) -> RepRingElement {
        a.neg()
    }

    /// Panics on labels of the wrong shape; validate with
    /// [`RepRing::check_element`] at the boundary.
    fn mul(&self, a: &RepRingElement, b: &RepRingElement) -> RepRingElement {
        self.multiply(a, b).expect("representation ring element of wrong shape")
    }

    fn is_zero(&self, a: &RepRingElement) -> bool {
        a.is_zero()
    }

    fn sigma(&self, a: &RepRingElement) -> RepRingElement {
        a.dual()
    }

    fn describe(&self) -> String {
        let factors: Vec<String> = self.shape.iter().map(|k| format!("GL{k}")).collect();
        format!("R({})", if factors.is_empty() { "1".to_string() } else { factors.join("x") })
    }

    fn render(&self, a: &RepRingElement) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gl2_tensor_squares() {
        assert_eq!(gl_tensor(&w(&[1, 0]), &w(&[1, 0])), vec![(w(&[1, 1]), 1), (w(&[2, 0]), 1)]);
        assert_eq!(gl_tensor(&w(&[0, -1]), &w(&[1, 0])), vec![(w(&[0, 0]), 1), (w(&[1, -1]), 1)]);
    }

    #[test]
    fn trivial_is_neutral() {
        let ring = RepRing::new(vec![2, 1]);
        let s: IrrLabel = "2,-1|3".parse().unwrap();
        let out = ring.tensor_decompose(&s, &ring.trivial()).unwrap();
        assert_eq!(out, RepRingElement::irreducible(s));
    }

    #[test]
    fn duals() {
        assert_eq!(w(&[2, 0]).dual(), w(&[0, -2]));
        assert_eq!(w(&[3]).dual(), w(&[-3]));
        assert_eq!(GLWeight::trivial(3).dual(), GLWeight::trivial(3));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(w(&[1, 0, 0]).dimension(), BigInt::from(3));
        assert_eq!(w(&[2, 1, 0]).dimension(), BigInt::from(8));
        assert_eq!(w(&[1, -1]).dimension(), BigInt::from(3));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let ring = RepRing::new(vec![2]);
        let bad: IrrLabel = "1".parse().unwrap();
        assert!(ring.tensor_decompose(&bad, &ring.trivial()).is_err());
        assert!("2,3".parse::<GLWeight>().is_err());
    }
}
