//! Hecke algebras of symmetric groups in the Kazhdan–Lusztig basis.
//!
//! Conventions (balanced normalization): the standard basis `H_w` satisfies
//! `H_s^2 = 1 + (v^-1 - v) H_s`, the bar involution sends `v -> v^-1` and
//! `H_w -> H_{w^-1}^-1`, and the KL basis element
//! `C_w = Σ_y h_{y,w} H_y` has `h_{w,w} = 1`, `h_{y,w} ∈ v Z[v]` for `y < w`
//! and `h_{y,w}(v) = v^{ℓ(w)-ℓ(y)} P_{y,w}(v^-2)` with `P` the classical KL
//! polynomial in `q`. With this choice `C_s^2 = (v + v^-1) C_s`.
//!
//! Two independent routes produce the structure constants `C_x C_y`:
//! the μ-recursion entirely inside the KL basis ([`HeckeKl::kl_product_table`])
//! and expansion into the standard basis followed by triangular re-expansion
//! ([`HeckeKl::kl_product_via_standard`]).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{AlgebraElement, AlgebraParts, BasedAlgebra};
use crate::laurent::LaurentPoly;

use super::perm::SymmetricGroup;
use super::CorpusError;

/// Largest supported number of generators (`S_5`).
pub const MAX_HECKE_RANK: usize = 4;

#[derive(Clone, Debug)]
pub struct HeckeKl {
    group: SymmetricGroup,
    /// `kl[x][w]` is `P_{x,w}` as a polynomial in `q` (exponents ≥ 0).
    kl: Vec<Vec<LaurentPoly>>,
    /// `mu[x][w]` is `μ(x, w)`.
    mu: Vec<Vec<BigInt>>,
    /// `C_w` expanded in the standard basis.
    kl_in_standard: Vec<AlgebraElement>,
}

impl HeckeKl {
    /// KL data for `S_{m+1}`, `1 ≤ m ≤ 4`.
    pub fn new(m: usize) -> Result<Self, CorpusError> {
        if !(1..=MAX_HECKE_RANK).contains(&m) {
            return Err(CorpusError::UnsupportedHeckeRank(m));
        }
        let group = SymmetricGroup::new(m);
        let n = group.order();
        let mut kl = vec![vec![LaurentPoly::zero(); n]; n];
        let mut mu = vec![vec![BigInt::zero(); n]; n];

        // Classical recursion: for w = s v with v < w,
        // P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
        //           - Σ_{z < v, sz < z} μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z},
        // where c = 1 if sx < x and 0 otherwise.
        for w in 0..n {
            if w == group.identity() {
                kl[w][w] = LaurentPoly::one();
                continue;
            }
            let s = group.element(w).word()[0] as usize;
            let v = group.left_mul(s, w);
            for x in 0..n {
                if !group.bruhat_le(x, w) {
                    continue;
                }
                let sx = group.left_mul(s, x);
                let c = i64::from(group.length(sx) < group.length(x));
                let mut p = kl[sx][v].shift(1 - c);
                p += &kl[x][v].shift(c);
                for z in 0..n {
                    if mu[z][v].is_zero() || !group.has_left_descent(s, z) {
                        continue;
                    }
                    let exp = (group.length(w) - group.length(z)) / 2;
                    let term = kl[x][z].shift(exp as i64).scale(&mu[z][v]);
                    p -= &term;
                }
                kl[x][w] = p;
            }
            for x in 0..n {
                let gap = group.length(w) as i64 - group.length(x) as i64;
                if gap > 0 && gap % 2 == 1 {
                    mu[x][w] = kl[x][w].coeff_at((gap - 1) / 2);
                }
            }
        }

        let kl_in_standard = (0..n)
            .map(|w| {
                AlgebraElement::from_terms((0..n).filter(|&y| !kl[y][w].is_zero()).map(|y| {
                    let gap = (group.length(w) - group.length(y)) as i64;
                    // P(q) -> v^gap P(v^-2)
                    let h = LaurentPoly::from_terms(
                        kl[y][w].terms().map(|(e, c)| (gap - 2 * e, c.clone())),
                    );
                    (y, h)
                }))
            })
            .collect();

        Ok(Self {
            group,
            kl,
            mu,
            kl_in_standard,
        })
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    /// `P_{x,w}(q)`.
    pub fn kl_poly(&self, x: usize, w: usize) -> &LaurentPoly {
        &self.kl[x][w]
    }

    pub fn mu(&self, x: usize, w: usize) -> &BigInt {
        &self.mu[x][w]
    }

    /// `C_w` in the standard basis.
    pub fn kl_in_standard(&self, w: usize) -> &AlgebraElement {
        &self.kl_in_standard[w]
    }

    /// `H_s X` for the generator `s_i`.
    pub fn standard_left_gen(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        let g = &self.group;
        let drop = LaurentPoly::from_terms([(-1, 1), (1, -1)]);
        let mut out = AlgebraElement::zero();
        for (y, p) in x.iter() {
            let sy = g.left_mul(i, y);
            out.add_term(sy, p);
            if g.length(sy) < g.length(y) {
                out.add_term(y, &(p * &drop));
            }
        }
        out
    }

    /// Product in the standard basis.
    pub fn standard_multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, p) in x.iter() {
            // H_a Y = H_{i1} (H_{i2} ( ... (H_{ik} Y)))
            let mut acc = y.clone();
            for &i in self.group.element(a).word().iter().rev() {
                acc = self.standard_left_gen(i as usize, &acc);
            }
            out.add_scaled(&acc, p);
        }
        out
    }

    /// Bar involution on the standard basis.
    pub fn standard_bar(&self, x: &AlgebraElement) -> AlgebraElement {
        let shift = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let mut out = AlgebraElement::zero();
        for (y, p) in x.iter() {
            // bar(H_y) = bar(H_{i1}) ... bar(H_{ik}), bar(H_s) = H_s + (v - v^-1)
            let mut acc = AlgebraElement::basis(self.group.identity());
            for &i in self.group.element(y).word().iter().rev() {
                let mut next = self.standard_left_gen(i as usize, &acc);
                next.add_scaled(&acc, &shift);
                acc = next;
            }
            out.add_scaled(&acc, &p.bar());
        }
        out
    }

    /// Re-expands a standard-basis element in the KL basis by peeling off the
    /// longest term (`C_w = H_w + lower terms`).
    pub fn standard_to_kl(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut rest = x.clone();
        let mut out = AlgebraElement::zero();
        while let Some(top) = rest
            .support()
            .max_by_key(|&w| (self.group.length(w), w))
        {
            let c = rest.coeff(top);
            out.add_term(top, &c);
            let mut sub = self.kl_in_standard[top].scaled(&c);
            sub = sub.scaled(&LaurentPoly::constant(-1));
            rest.add_assign(&sub);
        }
        out
    }

    /// `C_x C_y` by multiplying in the standard basis and re-expanding.
    pub fn kl_product_via_standard(&self, x: usize, y: usize) -> AlgebraElement {
        let prod = self.standard_multiply(&self.kl_in_standard[x], &self.kl_in_standard[y]);
        self.standard_to_kl(&prod)
    }

    /// `C_s X` inside the KL basis:
    /// `C_s C_w = (v + v^-1) C_w` if `sw < w`, otherwise
    /// `C_{sw} + Σ_{z < w, sz < z} μ(z, w) C_z`.
    pub fn kl_left_gen(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        let g = &self.group;
        let q2 = LaurentPoly::quantum_two();
        let mut out = AlgebraElement::zero();
        for (w, p) in x.iter() {
            let sw = g.left_mul(i, w);
            if g.length(sw) < g.length(w) {
                out.add_term(w, &(p * &q2));
                continue;
            }
            out.add_term(sw, p);
            for z in 0..g.order() {
                if !self.mu[z][w].is_zero() && g.has_left_descent(i, z) {
                    out.add_term(z, &p.scale(&self.mu[z][w]));
                }
            }
        }
        out
    }

    /// Full table `rows[x][y] = C_x C_y` via the KL-basis μ-recursion
    /// `C_{sx'} = C_s C_{x'} - Σ_{z: sz<z} μ(z, x') C_z`.
    pub fn kl_product_table(&self) -> Vec<Vec<AlgebraElement>> {
        let g = &self.group;
        let n = g.order();
        let mut rows: Vec<Vec<AlgebraElement>> = Vec::with_capacity(n);
        for x in 0..n {
            if x == g.identity() {
                rows.push((0..n).map(AlgebraElement::basis).collect());
                continue;
            }
            let s = g.element(x).word()[0] as usize;
            let xp = g.left_mul(s, x);
            let mut row: Vec<AlgebraElement> = rows[xp].iter().map(|e| self.kl_left_gen(s, e)).collect();
            for z in 0..n {
                if self.mu[z][xp].is_zero() || !g.has_left_descent(s, z) {
                    continue;
                }
                let c = LaurentPoly::constant(-self.mu[z][xp].clone());
                for (y, entry) in row.iter_mut().enumerate() {
                    entry.add_scaled(&rows[z][y], &c);
                }
            }
            rows.push(row);
        }
        rows
    }

    /// The based algebra: basis `C_w` labelled by normal forms, single unit
    /// `e`, involution `C_w -> C_{w^-1}`.
    pub fn to_algebra(&self) -> BasedAlgebra {
        let g = &self.group;
        let n = g.order();
        let e = g.identity();
        BasedAlgebra::new(AlgebraParts {
            name: Some(format!("hecke-S{}", g.degree())),
            labels: (0..n).map(|w| g.label(w)).collect(),
            units: vec![e],
            sector: vec![Some((e, e)); n],
            involution: (0..n).map(|w| g.inverse(w)).collect(),
            products: self.kl_product_table(),
        })
        .expect("generated Hecke tables are well formed")
    }
}

/// Hecke algebra of `S_{m+1}` in the KL basis.
pub fn gen_hecke_kl(m: usize) -> Result<BasedAlgebra, CorpusError> {
    Ok(HeckeKl::new(m)?.to_algebra())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn s2_square() {
        let alg = gen_hecke_kl(1).unwrap();
        assert_eq!(alg.rank(), 2);
        let cs = alg.index_of("s1").unwrap();
        assert_eq!(alg.product(cs, cs), &AlgebraElement::term(cs, lp("v + v^-1")));
    }

    #[test]
    fn s3_all_kl_polys_are_one() {
        let h = HeckeKl::new(2).unwrap();
        let g = h.group();
        for x in 0..g.order() {
            for w in 0..g.order() {
                let expected = if g.bruhat_le(x, w) { LaurentPoly::one() } else { LaurentPoly::zero() };
                assert_eq!(h.kl_poly(x, w), &expected);
            }
        }
    }

    #[test]
    fn s3_product_cs_cts() {
        let alg = gen_hecke_kl(2).unwrap();
        let idx = |l: &str| alg.index_of(l).unwrap();
        let expected = AlgebraElement::from_terms([(idx("s1s2s1"), LaurentPoly::one()), (idx("s1"), LaurentPoly::one())]);
        assert_eq!(alg.product(idx("s1"), idx("s2s1")), &expected);
    }

    #[test]
    fn s4_has_a_nontrivial_kl_polynomial() {
        // P_{s2, s2s1s3s2} = 1 + q in S_4
        let h = HeckeKl::new(3).unwrap();
        let g = h.group();
        let x = g.index_of_label("s2").unwrap();
        let w = g.from_word(&[2, 1, 3, 2]);
        assert_eq!(h.kl_poly(x, w), &lp("1 + v"));
    }

    #[test]
    fn unsupported_rank() {
        assert!(matches!(gen_hecke_kl(0), Err(CorpusError::UnsupportedHeckeRank(0))));
        assert!(matches!(gen_hecke_kl(9), Err(CorpusError::UnsupportedHeckeRank(9))));
    }

    #[test]
    fn quadratic_relation() {
        let h = HeckeKl::new(1).unwrap();
        let hs = AlgebraElement::basis(1);
        let sq = h.standard_multiply(&hs, &hs);
        assert_eq!(sq, AlgebraElement::from_terms([(0, LaurentPoly::one()), (1, lp("v^-1 - v"))]));
    }
}
