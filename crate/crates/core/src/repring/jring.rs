//! The ring `J_c`: free abelian group on `D_c × D_c × Irr G_c`.
//!
//! Basis elements `(d, d', s)` multiply by
//! `(d1, d1', s)(d2, d2', s') = δ_{d1', d2} Σ c_{s,s'}^{s''} (d1, d2', s'')`,
//! so `J_c` is the `n_c × n_c` matrix ring over the representation ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IrrLabel, RepError, RepRing, RepRingElement};
use crate::genmatrix::Matrix;

/// Indices `d, d'` run over `1..=n_c`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct JRingElement(BTreeMap<(usize, usize, IrrLabel), BigInt>);

impl JRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(d: usize, d2: usize, s: IrrLabel) -> Self {
        Self::term(d, d2, s, BigInt::one())
    }

    pub fn term(d: usize, d2: usize, s: IrrLabel, c: BigInt) -> Self {
        let mut x = Self::zero();
        x.add_term(d, d2, s, &c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, IrrLabel), &BigInt)> + '_ {
        self.0.iter()
    }

    pub fn add_term(&mut self, d: usize, d2: usize, s: IrrLabel, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (d, d2, s);
        let entry = self.0.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((d, d2, s), c) in &other.0 {
            out.add_term(*d, *d2, s.clone(), c);
        }
        out
    }
}

impl fmt::Display for JRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|((d, d2, s), c)| format!("{c}*({d},{d2},{s})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct JRing {
    rep: RepRing,
    n: usize,
}

impl JRing {
    pub fn new(shape: Vec<usize>, n: usize) -> Self {
        Self { rep: RepRing::new(shape), n }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rep_ring(&self) -> &RepRing {
        &self.rep
    }

    fn check(&self, x: &JRingElement) -> Result<(), RepError> {
        for (d, d2, s) in x.0.keys() {
            if *d == 0 || *d2 == 0 || *d > self.n || *d2 > self.n {
                return Err(RepError::IndexOutOfRange(*d, *d2, self.n));
            }
            self.rep.check_label(s)?;
        }
        Ok(())
    }

    /// `Σ_d (d, d, trivial)`.
    pub fn identity(&self) -> JRingElement {
        let mut out = JRingElement::zero();
        for d in 1..=self.n {
            out.add_term(d, d, self.rep.trivial(), &BigInt::one());
        }
        out
    }

    pub fn multiply(&self, x: &JRingElement, y: &JRingElement) -> Result<JRingElement, RepError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = JRingElement::zero();
        for ((d1, d1p, s), a) in &x.0 {
            for ((d2, d2p, s2), b) in &y.0 {
                if d1p != d2 {
                    continue;
                }
                let ab = a * b;
                for (u, c) in self.rep.tensor_decompose(s, s2)?.terms() {
                    out.add_term(*d1, *d2p, u.clone(), &(&ab * c));
                }
            }
        }
        Ok(out)
    }

    /// `(d, d', s) ↦ E_{d d'}(s)`; the matrix is indexed from 0.
    pub fn matrix_iso(&self, x: &JRingElement) -> Result<Matrix<RepRingElement>, RepError> {
        self.check(x)?;
        let mut m = Matrix::filled(self.n, RepRingElement::zero());
        for ((d, d2, s), c) in &x.0 {
            let entry = m.get_mut(d - 1, d2 - 1);
            entry.add_term(s.clone(), c);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genmatrix::mat_mul;

    fn lab(s: &str) -> IrrLabel {
        s.parse().unwrap()
    }

    #[test]
    fn delta_rule() {
        let j = JRing::new(vec![2], 2);
        let x = JRingElement::basis(1, 2, lab("1,0"));
        let y = JRingElement::basis(1, 1, lab("1,0"));
        assert!(j.multiply(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn unit_component() {
        let j = JRing::new(vec![2], 2);
        let x = JRingElement::basis(1, 2, lab("2,-1"));
        let one = JRingElement::basis(1, 1, lab("0,0"));
        assert_eq!(j.multiply(&one, &x).unwrap(), x);
        assert_eq!(j.multiply(&j.identity(), &x).unwrap(), x);
    }

    #[test]
    fn gl2_product() {
        let j = JRing::new(vec![2], 2);
        let x = JRingElement::basis(1, 2, lab("1,0"));
        let y = JRingElement::basis(2, 1, lab("1,0"));
        let expected = JRingElement::basis(1, 1, lab("2,0")).add(&JRingElement::basis(1, 1, lab("1,1")));
        let xy = j.multiply(&x, &y).unwrap();
        assert_eq!(xy, expected);
        let lhs = j.matrix_iso(&xy).unwrap();
        let rhs = mat_mul(j.rep_ring(), &j.matrix_iso(&x).unwrap(), &j.matrix_iso(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn out_of_range_index() {
        let j = JRing::new(vec![1], 2);
        assert!(j.multiply(&JRingElement::basis(3, 1, lab("0")), &j.identity()).is_err());
    }
}
