//! Exact arithmetic in `k = Z[v, v^-1]`.
//!
//! A [`LaurentPoly`] is a sparse map from exponent to a nonzero
//! arbitrary-precision coefficient. The empty map is the zero polynomial, so
//! every polynomial has exactly one stored form and derived equality is ring
//! equality.
//!
//! The textual form used by every file format is a sum of `c*v^e` terms in
//! descending exponent order, e.g. `1*v^1 + 1*v^-1`; `0` is the zero
//! polynomial. The parser is whitespace-insensitive and also accepts `-`
//! separators and the shorthands `v`, `v^e`, `c*v` and bare integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse Laurent polynomial `{input}`: {reason}")]
pub struct ParseLaurentError {
    pub input: String,
    pub reason: String,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `v + v^-1`, the quantum integer `[2]`.
    pub fn quantum_two() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent with a nonzero coefficient; `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of `v^n` (zero if absent).
    pub fn coeff_at(&self, n: i64) -> BigInt {
        self.terms.get(&n).cloned().unwrap_or_default()
    }

    /// Returns the constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// The substitution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether `p(v) = p(v^-1)`.
    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn add_term(&mut self, exponent: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    /// `self += a * b`, avoiding an intermediate allocation for the product.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, &(ca * cb));
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*v^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseLaurentError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }

        // Split into signed terms. A sign directly after `^` belongs to the
        // exponent, and a sign directly after another separator is folded into
        // the following term (so `a+-3*v^2` is accepted).
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sep = (ch == '+' || ch == '-') && !matches!(prev, Some('^'));
            if is_sep && !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if is_sep {
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(err("dangling sign"));
        }
        pieces.push((negative, current));

        let mut p = LaurentPoly::zero();
        for (neg, term) in pieces {
            let (mut c, e) = parse_term(&term).map_err(|r| err(&r))?;
            if neg {
                c = -c;
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(BigInt, i64), String> {
    let (coeff_part, var_part) = match term.find('v') {
        None => (term, None),
        Some(pos) => {
            let coeff = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            (coeff, Some(&term[pos + 1..]))
        }
    };
    let coeff = if coeff_part.is_empty() {
        if var_part.is_none() {
            return Err(format!("empty term `{term}`"));
        }
        BigInt::one()
    } else {
        coeff_part
            .parse::<BigInt>()
            .map_err(|_| format!("bad coefficient `{coeff_part}`"))?
    };
    let exponent = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let digits = rest
                .strip_prefix('^')
                .ok_or_else(|| format!("expected `^` in `{term}`"))?;
            digits
                .parse::<i64>()
                .map_err(|_| format!("bad exponent `{digits}`"))?
        }
    };
    Ok((coeff, exponent))
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&lp("v + 1") + &lp("v^-1 - 1"), lp("v + v^-1"));
        let p = lp("3*v^2 - 7*v^-4");
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert!((&lp("v^2") + &lp("-1*v^2")).is_zero());
    }

    #[test]
    fn mul_examples() {
        let q2 = LaurentPoly::quantum_two();
        assert_eq!(&q2 * &q2, lp("v^2 + 2 + v^-2"));
        assert_eq!(&lp("v - v^-1") * &q2, lp("v^2 - v^-2"));
        assert!((&LaurentPoly::zero() * &q2).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp("v^2 + 3*v^-1").bar(), lp("v^-2 + 3*v"));
        assert_eq!(lp("5").bar(), lp("5"));
        let p = lp("2*v^5 - v + 9*v^-3");
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(lp("v^3 + v^-7").max_degree(), Some(3));
        assert_eq!(LaurentPoly::zero().max_degree(), None);
        assert_eq!(lp("7").max_degree(), Some(0));
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(lp("v + 2").coeff_at(0), BigInt::from(2));
        assert_eq!(lp("v + 2").coeff_at(1), BigInt::from(1));
        assert_eq!(LaurentPoly::zero().coeff_at(-3), BigInt::from(0));
    }

    #[test]
    fn display_round_trips() {
        let p = lp("v + v^-1");
        assert_eq!(p.to_string(), "1*v^1 + 1*v^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("-2*v^3 + 5").to_string(), "-2*v^3 + 5*v^0");
        assert_eq!(lp(&p.to_string()), p);
        assert_eq!(lp(" 1 * v ^ -2 +\t-3*v^0 "), LaurentPoly::from_terms([(-2, 1), (0, -3)]));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "+", "v^", "x", "1*v^a", "3*", "1 +"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn large_coefficients_stay_exact() {
        let big = LaurentPoly::constant(BigInt::from(u64::MAX));
        let sq = &big * &big;
        assert_eq!(sq.coeff_at(0), BigInt::from(u64::MAX) * BigInt::from(u64::MAX));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i64..=8, -1_000_000i64..=1_000_000), 0..6)
            .prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn bar_is_ring_automorphism(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
            prop_assert_eq!((&p + &q).bar(), &p.bar() + &q.bar());
            prop_assert_eq!(p.bar().bar(), p);
        }

        #[test]
        fn degree_is_additive(p in arb_poly(), q in arb_poly()) {
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!(
                    (&p * &q).max_degree(),
                    Some(p.max_degree().unwrap() + q.max_degree().unwrap())
                );
            }
        }

        #[test]
        fn text_form_round_trips(p in arb_poly()) {
            prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        }
    }
}
