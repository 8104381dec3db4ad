//! Hecke algebras of symmetric groups in the standard basis `H_w`, with the
//! Kazhdan–Lusztig basis built by the `C_s C_y` recursion in that basis.
//!
//! Conventions: `H_s² = 1 + (v⁻¹ − v) H_s`, `C_s = H_s + v`. Elements are
//! one-line permutations of `0..m+1`.

use std::collections::{BTreeMap, HashMap};

use affcell::LaurentPoly;

pub type Perm = Vec<u8>;
pub type TElem = BTreeMap<Perm, LaurentPoly>;

pub fn length(w: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// `s_i ∘ w`: exchanges the values `i-1` and `i`.
pub fn left_gen(i: usize, w: &[u8]) -> Perm {
    let (a, b) = ((i - 1) as u8, i as u8);
    w.iter().map(|&x| if x == a { b } else if x == b { a } else { x }).collect()
}

/// `w ∘ s_i`: exchanges the positions `i-1` and `i`.
pub fn right_gen(w: &[u8], i: usize) -> Perm {
    let mut out = w.to_vec();
    out.swap(i - 1, i);
    out
}

/// The element `s_{i1} .. s_{ik}` of a label such as `s1s2s1` (or `e`).
pub fn perm_of_label(label: &str, degree: usize) -> Perm {
    let mut w: Perm = (0..degree as u8).collect();
    if label == "e" {
        return w;
    }
    for part in label.split('s').filter(|p| !p.is_empty()) {
        w = right_gen(&w, part.parse().expect("generator index"));
    }
    w
}

fn all_perms(degree: usize) -> Vec<Perm> {
    let mut out: Vec<Perm> = vec![Vec::new()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..degree as u8 {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn add_into(acc: &mut TElem, w: Perm, c: &LaurentPoly) {
    let e = acc.entry(w.clone()).or_insert_with(LaurentPoly::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&w);
    }
}

fn scale(x: &TElem, c: &LaurentPoly) -> TElem {
    let mut out = TElem::new();
    for (w, p) in x {
        add_into(&mut out, w.clone(), &(p * c));
    }
    out
}

fn add(x: &TElem, y: &TElem) -> TElem {
    let mut out = x.clone();
    for (w, p) in y {
        add_into(&mut out, w.clone(), p);
    }
    out
}

pub struct HeckeOracle {
    generators: usize,
    perms: Vec<Perm>,
    kl: HashMap<Perm, TElem>,
}

impl HeckeOracle {
    pub fn new(generators: usize) -> Self {
        let degree = generators + 1;
        let mut perms = all_perms(degree);
        perms.sort_by_key(|w| length(w));
        let mut oracle = Self { generators, perms: perms.clone(), kl: HashMap::new() };
        let e: Perm = (0..degree as u8).collect();
        oracle.kl.insert(e.clone(), TElem::from([(e, LaurentPoly::one())]));
        for w in perms.iter().filter(|w| length(w) > 0) {
            // the largest left descent
            let s = (1..=generators).rev().find(|&i| length(&left_gen(i, w)) < length(w)).expect("descent");
            let y = left_gen(s, w);
            let cy = oracle.kl[&y].clone();
            let mut cw = add(&oracle.h_left(s, &cy), &scale(&cy, &LaurentPoly::v()));
            for z in perms.iter().filter(|z| length(z) < length(&y)) {
                if length(&left_gen(s, z)) > length(z) {
                    continue;
                }
                let mu = cy.get(z).map(|h| h.coeff_at(1)).unwrap_or_default();
                if mu != 0.into() {
                    cw = add(&cw, &scale(&oracle.kl[z], &LaurentPoly::constant(-mu)));
                }
            }
            oracle.kl.insert(w.clone(), cw);
        }
        oracle
    }

    pub fn degree(&self) -> usize {
        self.generators + 1
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// `H_s X`.
    pub fn h_left(&self, s: usize, x: &TElem) -> TElem {
        let drop = LaurentPoly::from_terms([(-1, 1), (1, -1)]);
        let mut out = TElem::new();
        for (w, p) in x {
            let sw = left_gen(s, w);
            if length(&sw) < length(w) {
                add_into(&mut out, w.clone(), &(p * &drop));
            }
            add_into(&mut out, sw, p);
        }
        out
    }

    /// A reduced word of `w` (any one).
    fn word(&self, w: &[u8]) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.to_vec();
        while let Some(i) = (1..=self.generators).find(|&i| length(&left_gen(i, &cur)) < length(&cur)) {
            word.push(i);
            cur = left_gen(i, &cur);
        }
        word
    }

    pub fn multiply(&self, x: &TElem, y: &TElem) -> TElem {
        let mut out = TElem::new();
        for (w, p) in x {
            let mut acc = y.clone();
            for &i in self.word(w).iter().rev() {
                acc = self.h_left(i, &acc);
            }
            out = add(&out, &scale(&acc, p));
        }
        out
    }

    /// `C_w` in the standard basis.
    pub fn kl(&self, w: &[u8]) -> &TElem {
        &self.kl[w]
    }

    /// The coefficient `h_{z,w}` of `H_z` in `C_w`.
    pub fn h(&self, z: &[u8], w: &[u8]) -> LaurentPoly {
        self.kl[w].get(z).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// `P_{z,w}(q)` as a polynomial in `q` stored in the `v` slot.
    pub fn kl_poly(&self, z: &[u8], w: &[u8]) -> LaurentPoly {
        let shift = (length(w) as i64) - (length(z) as i64);
        let h = self.h(z, w);
        LaurentPoly::from_terms(h.terms().map(|(e, c)| ((shift - e) / 2, c.clone())))
    }

    /// `bar(Σ p_w H_w)` with `bar(H_s) = H_s + v − v⁻¹`.
    pub fn bar(&self, x: &TElem) -> TElem {
        let shift = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let e: Perm = (0..self.degree() as u8).collect();
        let mut out = TElem::new();
        for (w, p) in x {
            let mut acc = TElem::from([(e.clone(), LaurentPoly::one())]);
            for &i in self.word(w).iter().rev() {
                acc = add(&self.h_left(i, &acc), &scale(&acc, &shift));
            }
            out = add(&out, &scale(&acc, &p.bar()));
        }
        out
    }

    /// `C_x C_y` re-expanded in the KL basis.
    pub fn kl_product(&self, x: &[u8], y: &[u8]) -> BTreeMap<Perm, LaurentPoly> {
        let mut rest = self.multiply(&self.kl[x], &self.kl[y]);
        let mut out = BTreeMap::new();
        while let Some(top) = rest.keys().max_by_key(|w| (length(w), (*w).clone())).cloned() {
            let c = rest[&top].clone();
            rest = add(&rest, &scale(&self.kl[&top], &(-&c)));
            out.insert(top, c);
        }
        out
    }
}
