//! The a-function, γ-constants and the asymptotic ring `A_c^∞` of a 2-cell.
//!
//! Elements of `A_c^∞` (and of `k ⊗ A_c^∞`) are stored as [`AlgebraElement`]s
//! whose indices are the basis indices of the cell members, read as `t_b`.
//! Integral elements simply have constant coefficients.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, BasedAlgebra, SAMPLED_TRIPLES};
use crate::cells::{lr_preorder, validate_two_sided_cell, CellError, Preorder};
use crate::laurent::LaurentPoly;
use crate::verdict::Verdict;

/// Beyond this many γ-idempotents the distinguished-set search is greedy only.
pub const EXHAUSTIVE_CANDIDATES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticError {
    #[error(transparent)]
    NotACell(#[from] CellError),
    #[error("deg c_{{{b},{b2}}}^{{{b3}}} = {degree} exceeds a({b}) = {a}")]
    DegreeBound {
        b: String,
        b2: String,
        b3: String,
        degree: i64,
        a: i64,
    },
    #[error("no distinguished set: {0}")]
    NoDistinguishedSet(String),
    #[error("{0} and {1} do not lie in the same cell")]
    CrossCell(String, String),
}

/// Values of the a-function on one 2-cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AFunctionTable {
    values: BTreeMap<usize, i64>,
}

impl AFunctionTable {
    pub fn get(&self, b: usize) -> Option<i64> {
        self.values.get(&b).copied()
    }

    pub fn values(&self) -> &BTreeMap<usize, i64> {
        &self.values
    }

    /// The common value when `a` is constant on the cell.
    pub fn constant_value(&self) -> Option<i64> {
        let mut it = self.values.values();
        let first = *it.next()?;
        it.all(|&x| x == first).then_some(first)
    }

    /// P1(c): `a` is constant on `c·1_λ` for every unit `λ`.
    pub fn check_constant_on_sectors(&self, alg: &BasedAlgebra) -> Verdict {
        let mut v = Verdict::new("P1(c) a constant on c·1_λ");
        let mut seen: BTreeMap<usize, (usize, i64)> = BTreeMap::new();
        for (&b, &a) in &self.values {
            let Some((_, right)) = alg.sector(b) else {
                continue;
            };
            match seen.get(&right) {
                Some(&(b0, a0)) if a0 != a => v.record(format!(
                    "a({}) = {a0} but a({}) = {a} in sector {}",
                    alg.label(b0),
                    alg.label(b),
                    alg.label(right)
                )),
                Some(_) => {}
                None => {
                    seen.insert(right, (b, a));
                }
            }
        }
        v
    }
}

/// `a(b)` for every `b` in a 2-cell; validates that `cell` is a 2-cell.
pub fn a_function(alg: &BasedAlgebra, cell: &[usize]) -> Result<AFunctionTable, AsymptoticError> {
    a_function_with(alg, &lr_preorder(alg), cell)
}

/// As [`a_function`] with a precomputed two-sided preorder.
pub fn a_function_with(alg: &BasedAlgebra, pre: &Preorder, cell: &[usize]) -> Result<AFunctionTable, AsymptoticError> {
    validate_two_sided_cell(alg, pre, cell)?;
    let members: BTreeSet<usize> = cell.iter().copied().collect();
    let values = members
        .iter()
        .map(|&b| {
            let top = members
                .iter()
                .flat_map(|&b2| alg.product(b, b2).iter().filter(|(b3, _)| members.contains(b3)))
                .filter_map(|(_, c)| c.max_degree())
                .max()
                .unwrap_or(0);
            (b, top.max(0))
        })
        .collect();
    Ok(AFunctionTable { values })
}

/// A distinguished set together with any other valid choices found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishedSet {
    pub chosen: Vec<usize>,
    /// All valid sets found (including `chosen`), sorted.
    pub all: Vec<Vec<usize>>,
}

impl DistinguishedSet {
    pub fn is_unique(&self) -> bool {
        self.all.len() == 1
    }
}

/// The asymptotic ring of one 2-cell.
#[derive(Debug, Clone)]
pub struct AsymptoticAlgebra {
    cell: Vec<usize>,
    members: BTreeSet<usize>,
    a: AFunctionTable,
    gamma: BTreeMap<(usize, usize, usize), BigInt>,
    distinguished: Vec<usize>,
}

/// γ-constants of a cell: the coefficient of `v^{a(b)}` in each within-cell
/// structure constant `c_{b,b'}^{b''}`.
pub fn gamma_table(alg: &BasedAlgebra, cell: &[usize], af: &AFunctionTable) -> Result<AsymptoticAlgebra, AsymptoticError> {
    let members: BTreeSet<usize> = cell.iter().copied().collect();
    let mut gamma = BTreeMap::new();
    for &b in &members {
        let a = af.get(b).expect("a-function computed on this cell");
        for &b2 in &members {
            for (b3, c) in alg.product(b, b2).iter() {
                if !members.contains(&b3) {
                    continue;
                }
                if let Some(degree) = c.max_degree().filter(|&d| d > a) {
                    return Err(AsymptoticError::DegreeBound {
                        b: alg.label(b).into(),
                        b2: alg.label(b2).into(),
                        b3: alg.label(b3).into(),
                        degree,
                        a,
                    });
                }
                let g = c.coeff_at(a);
                if !g.is_zero() {
                    gamma.insert((b, b2, b3), g);
                }
            }
        }
    }
    Ok(AsymptoticAlgebra {
        cell: members.iter().copied().collect(),
        members,
        a: af.clone(),
        gamma,
        distinguished: Vec::new(),
    })
}

fn constant(c: &BigInt) -> LaurentPoly {
    LaurentPoly::constant(c.clone())
}

impl AsymptoticAlgebra {
    /// a-function, γ-table and distinguished set in one go.
    pub fn build(alg: &BasedAlgebra, pre: &Preorder, cell: &[usize]) -> Result<Self, AsymptoticError> {
        let af = a_function_with(alg, pre, cell)?;
        let mut asy = gamma_table(alg, cell, &af)?;
        let d = distinguished_set(&asy)?;
        asy.distinguished = d.chosen;
        Ok(asy)
    }

    pub fn cell(&self) -> &[usize] {
        &self.cell
    }

    pub fn contains(&self, b: usize) -> bool {
        self.members.contains(&b)
    }

    pub fn a_function(&self) -> &AFunctionTable {
        &self.a
    }

    /// `γ_{b,b'}^{b''}`, zero when any argument lies outside the cell.
    pub fn gamma(&self, b: usize, b2: usize, b3: usize) -> BigInt {
        self.gamma.get(&(b, b2, b3)).cloned().unwrap_or_default()
    }

    pub fn gamma_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &BigInt)> + '_ {
        self.gamma.iter()
    }

    pub fn distinguished(&self) -> &[usize] {
        &self.distinguished
    }

    pub fn with_distinguished(mut self, d: Vec<usize>) -> Self {
        self.distinguished = d;
        self
    }

    /// `t_b t_{b'}` as an integral combination of `t`-basis elements.
    pub fn t_product(&self, b: usize, b2: usize) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.cell
                .iter()
                .filter_map(|&b3| self.gamma.get(&(b, b2, b3)).map(|g| (b3, constant(g)))),
        )
    }

    /// Product in `k ⊗ A_c^∞`.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, xc) in x.iter() {
            for (b2, yc) in y.iter() {
                let p = self.t_product(b, b2);
                if !p.is_zero() {
                    out.add_scaled(&p, &(xc * yc));
                }
            }
        }
        out
    }

    /// `Σ_{d ∈ D_c} t_d`.
    pub fn identity(&self) -> AlgebraElement {
        AlgebraElement::from_terms(self.distinguished.iter().map(|&d| (d, LaurentPoly::one())))
    }

    /// Associativity of the γ-ring on all within-cell triples.
    pub fn check_associativity(&self, alg: &BasedAlgebra) -> Verdict {
        let mut v = Verdict::new("A_c^∞ associativity");
        for &x in &self.cell {
            for &y in &self.cell {
                let xy = self.t_product(x, y);
                for &z in &self.cell {
                    let left = self.multiply(&xy, &AlgebraElement::basis(z));
                    let right = self.multiply(&AlgebraElement::basis(x), &self.t_product(y, z));
                    if left != right {
                        v.record(format!("(t_{0} t_{1}) t_{2} ≠ t_{0} (t_{1} t_{2})", alg.label(x), alg.label(y), alg.label(z)));
                    }
                }
            }
        }
        v
    }

    /// P2(a) for the current distinguished set.
    pub fn check_generalized_unit(&self, alg: &BasedAlgebra) -> Verdict {
        let mut v = Verdict::new("P2 generalized unit of A_c^∞");
        if let Err(e) = check_unit_candidate(self, &self.distinguished) {
            v.record(render_unit_failure(alg, &e));
        }
        v
    }

    /// The bimodule action `t_b ∘ b' = Σ_{b''∈c} c_{b,b'}^{b''} t_{b''}`,
    /// extended linearly in the first argument.
    pub fn infty_action(&self, alg: &BasedAlgebra, t: &AlgebraElement, b2: usize) -> Result<AlgebraElement, AsymptoticError> {
        if !self.contains(b2) {
            return Err(AsymptoticError::CrossCell(alg.label(b2).into(), alg.label(self.cell[0]).into()));
        }
        let mut out = AlgebraElement::zero();
        for (b, c) in t.iter() {
            if !self.contains(b) {
                return Err(AsymptoticError::CrossCell(alg.label(b).into(), alg.label(b2).into()));
            }
            let within = alg.product(b, b2).restrict(|x| self.contains(x));
            out.add_scaled(&within, c);
        }
        Ok(out)
    }

    /// The form element `Ψ_c = (Σ t_d) ∘ (Σ d)`.
    pub fn psi_element(&self, alg: &BasedAlgebra) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        let one = self.identity();
        for &d in &self.distinguished {
            out.add_assign(&self.infty_action(alg, &one, d).expect("D_c lies in the cell"));
        }
        out
    }

    /// Within-cell product `b b'` in `A_c`.
    fn cell_product(&self, alg: &BasedAlgebra, b: usize, b2: usize) -> AlgebraElement {
        alg.product(b, b2).restrict(|x| self.contains(x))
    }

    /// `t_b ∘ b' = t_b · Ψ_c · t_{b'}` for every pair in the cell.
    pub fn check_psi_identity(&self, alg: &BasedAlgebra) -> Verdict {
        let mut v = Verdict::new("t_b ∘ b' = t_b Ψ t_b'");
        let psi = self.psi_element(alg);
        for &b in &self.cell {
            let left_factor = self.multiply(&AlgebraElement::basis(b), &psi);
            for &b2 in &self.cell {
                let lhs = self.cell_product(alg, b, b2);
                let rhs = self.multiply(&left_factor, &AlgebraElement::basis(b2));
                if lhs != rhs {
                    v.record(format!(
                        "b={}, b'={}: {} ≠ {}",
                        alg.label(b),
                        alg.label(b2),
                        alg.render(&lhs),
                        alg.render(&rhs)
                    ));
                }
            }
        }
        v
    }

    /// Left `A_c^∞`-action and right `A_c`-action on `k ⊗ A_c^∞` are module
    /// actions and commute, checked on basis triples.
    pub fn check_bimodule(&self, alg: &BasedAlgebra) -> Verdict {
        let mut v = Verdict::new("A_c^∞-A_c bimodule");
        let act = |t: &AlgebraElement, b: usize| self.infty_action(alg, t, b).expect("within cell");
        let act_elem = |t: &AlgebraElement, x: &AlgebraElement| {
            let mut out = AlgebraElement::zero();
            for (b, c) in x.iter() {
                out.add_scaled(&act(t, b), c);
            }
            out
        };
        for &x in &self.cell {
            let tx = AlgebraElement::basis(x);
            for &y in &self.cell {
                let ty = AlgebraElement::basis(y);
                for &z in &self.cell {
                    let left = act(&self.multiply(&tx, &ty), z);
                    let right = self.multiply(&tx, &act(&ty, z));
                    if left != right {
                        v.record(format!(
                            "(t_{0} t_{1}) ∘ {2} ≠ t_{0} (t_{1} ∘ {2})",
                            alg.label(x),
                            alg.label(y),
                            alg.label(z)
                        ));
                    }
                    let left = act(&act(&tx, y), z);
                    let right = act_elem(&tx, &self.cell_product(alg, y, z));
                    if left != right {
                        v.record(format!("(t_{0} ∘ {1}) ∘ {2} ≠ t_{0} ∘ ({1} {2})", alg.label(x), alg.label(y), alg.label(z)));
                    }
                }
            }
        }
        v
    }
}

#[derive(Debug)]
enum UnitFailure {
    NotIdempotent(usize),
    NotOrthogonal(usize, usize),
    NotIdentity { left: bool, b: usize },
    Incompatible { left: bool, b: usize },
}

fn render_unit_failure(alg: &BasedAlgebra, e: &UnitFailure) -> String {
    match e {
        UnitFailure::NotIdempotent(d) => format!("t_{0} t_{0} ≠ t_{0}", alg.label(*d)),
        UnitFailure::NotOrthogonal(d, d2) => format!("t_{} t_{} ≠ 0", alg.label(*d), alg.label(*d2)),
        UnitFailure::NotIdentity { left, b } => {
            format!("Σ t_d is not a {} identity on t_{}", if *left { "left" } else { "right" }, alg.label(*b))
        }
        UnitFailure::Incompatible { left, b } => format!(
            "t_{} does not lie in a single {} sector",
            alg.label(*b),
            if *left { "left" } else { "right" }
        ),
    }
}

/// Checks that `set` is a generalized unit of `A_c^∞` compatible with the
/// `t`-basis: orthogonal idempotents, sum a two-sided identity, and each
/// `t_b` fixed by exactly one `t_d` on each side and killed by the others.
fn check_unit_candidate(asy: &AsymptoticAlgebra, set: &[usize]) -> Result<(), UnitFailure> {
    for &d in set {
        if asy.t_product(d, d) != AlgebraElement::term(d, LaurentPoly::one()) {
            return Err(UnitFailure::NotIdempotent(d));
        }
        for &d2 in set {
            if d != d2 && !asy.t_product(d, d2).is_zero() {
                return Err(UnitFailure::NotOrthogonal(d, d2));
            }
        }
    }
    for &b in &asy.cell {
        let tb = AlgebraElement::term(b, LaurentPoly::one());
        for left in [true, false] {
            let mut fixed = 0;
            for &d in set {
                let p = if left { asy.t_product(d, b) } else { asy.t_product(b, d) };
                if p == tb {
                    fixed += 1;
                } else if !p.is_zero() {
                    return Err(UnitFailure::Incompatible { left, b });
                }
            }
            match fixed {
                1 => {}
                0 => return Err(UnitFailure::NotIdentity { left, b }),
                _ => return Err(UnitFailure::Incompatible { left, b }),
            }
        }
    }
    Ok(())
}

/// Finds `D_c`: γ-idempotents forming a basis-compatible generalized unit.
pub fn distinguished_set(asy: &AsymptoticAlgebra) -> Result<DistinguishedSet, AsymptoticError> {
    let candidates: Vec<usize> = asy
        .cell
        .iter()
        .copied()
        .filter(|&d| asy.t_product(d, d) == AlgebraElement::term(d, LaurentPoly::one()))
        .collect();
    let orthogonal = |d: usize, d2: usize| asy.t_product(d, d2).is_zero() && asy.t_product(d2, d).is_zero();

    let mut all = Vec::new();
    if candidates.len() <= EXHAUSTIVE_CANDIDATES {
        // enumerate orthogonal families by extension in index order
        fn extend(
            k: usize,
            cur: &mut Vec<usize>,
            candidates: &[usize],
            orthogonal: &dyn Fn(usize, usize) -> bool,
            accept: &mut dyn FnMut(&[usize]),
        ) {
            if k == candidates.len() {
                if !cur.is_empty() {
                    accept(cur);
                }
                return;
            }
            let d = candidates[k];
            if cur.iter().all(|&x| orthogonal(x, d)) {
                cur.push(d);
                extend(k + 1, cur, candidates, orthogonal, accept);
                cur.pop();
            }
            extend(k + 1, cur, candidates, orthogonal, accept);
        }
        let mut accept = |set: &[usize]| {
            if check_unit_candidate(asy, set).is_ok() {
                all.push(set.to_vec());
            }
        };
        extend(0, &mut Vec::new(), &candidates, &orthogonal, &mut accept);
    } else {
        let mut greedy: Vec<usize> = Vec::new();
        for &d in &candidates {
            if greedy.iter().all(|&x| orthogonal(x, d)) {
                greedy.push(d);
            }
        }
        if check_unit_candidate(asy, &greedy).is_ok() {
            all.push(greedy);
        }
    }
    all.sort();
    match all.first() {
        Some(chosen) => Ok(DistinguishedSet { chosen: chosen.clone(), all }),
        None => Err(AsymptoticError::NoDistinguishedSet(format!(
            "{} γ-idempotent candidates, none forming a generalized unit",
            candidates.len()
        ))),
    }
}

/// Both P3 identities for all quadruples `(b1, b2, b3, b')` with `b2, b'` in
/// the same cell; exhaustive up to `max_exhaustive_rank`, seeded sampling
/// beyond.
pub fn check_p3(alg: &BasedAlgebra, asys: &[AsymptoticAlgebra], max_exhaustive_rank: usize, seed: u64) -> Verdict {
    let mut v = Verdict::new("P3 identities");
    let n = alg.rank();
    let mut cell_index = vec![usize::MAX; n];
    for (i, asy) in asys.iter().enumerate() {
        for &b in asy.cell() {
            cell_index[b] = i;
        }
    }
    let mut check = |b1: usize, b2: usize, b3: usize, bp: usize| {
        let Some(asy) = asys.get(cell_index[b2]) else {
            return;
        };
        if !asy.contains(bp) {
            return;
        }
        let c = |x: usize, y: usize, z: usize| alg.structure_constant_ref(x, y, z);
        let mut lhs1 = LaurentPoly::zero();
        let mut rhs1 = LaurentPoly::zero();
        let mut lhs2 = LaurentPoly::zero();
        let mut rhs2 = LaurentPoly::zero();
        for &b in asy.cell() {
            if let Some(cv) = c(b1, b2, b) {
                lhs1 += &cv.scale(&asy.gamma(b, b3, bp));
            }
            if let Some(cv) = c(b1, b, bp) {
                rhs1 += &cv.scale(&asy.gamma(b2, b3, b));
            }
            if let Some(cv) = c(b, b3, bp) {
                lhs2 += &cv.scale(&asy.gamma(b1, b2, b));
            }
            if let Some(cv) = c(b2, b3, b) {
                rhs2 += &cv.scale(&asy.gamma(b1, b, bp));
            }
        }
        let q = format!("({}, {}, {}, {})", alg.label(b1), alg.label(b2), alg.label(b3), alg.label(bp));
        if lhs1 != rhs1 {
            v.record(format!("first identity at {q}: {lhs1} ≠ {rhs1}"));
        }
        if lhs2 != rhs2 {
            v.record(format!("second identity at {q}: {lhs2} ≠ {rhs2}"));
        }
    };
    if n <= max_exhaustive_rank {
        for asy in asys {
            for &b2 in asy.cell() {
                for &bp in asy.cell() {
                    for b1 in 0..n {
                        for b3 in 0..n {
                            check(b1, b2, b3, bp);
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(usize, usize)> = asys
            .iter()
            .flat_map(|asy| asy.cell().iter().flat_map(move |&b2| asy.cell().iter().map(move |&bp| (b2, bp))))
            .collect();
        if !pairs.is_empty() {
            for _ in 0..SAMPLED_TRIPLES {
                let (b2, bp) = pairs[rng.gen_range(0..pairs.len())];
                check(rng.gen_range(0..n), b2, rng.gen_range(0..n), bp);
            }
        }
    }
    v
}

/// Constant `1` as a t-coefficient; exposed for callers building integral
/// elements.
pub fn t_basis(b: usize) -> AlgebraElement {
    AlgebraElement::term(b, LaurentPoly::constant(BigInt::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::two_sided_cells;
    use crate::corpus::gen_hecke_kl;

    fn cell_of(alg: &BasedAlgebra, labels: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = labels.iter().map(|l| alg.index_of(l).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn s2_values() {
        let alg = gen_hecke_kl(1).unwrap();
        let cs = cell_of(&alg, &["s1"]);
        let af = a_function(&alg, &cs).unwrap();
        assert_eq!(af.get(cs[0]), Some(1));
        let asy = gamma_table(&alg, &cs, &af).unwrap();
        assert_eq!(asy.gamma(cs[0], cs[0], cs[0]), BigInt::one());
        assert_eq!(distinguished_set(&asy).unwrap().chosen, cs);
    }

    #[test]
    fn s3_middle_cell() {
        let alg = gen_hecke_kl(2).unwrap();
        let mid = cell_of(&alg, &["s1", "s2", "s1s2", "s2s1"]);
        let pre = lr_preorder(&alg);
        let asy = AsymptoticAlgebra::build(&alg, &pre, &mid).unwrap();
        assert_eq!(asy.a_function().constant_value(), Some(1));
        let (s, ts) = (alg.index_of("s1").unwrap(), alg.index_of("s2s1").unwrap());
        assert!(asy.gamma(s, ts, s).is_zero());
        assert_eq!(asy.distinguished(), cell_of(&alg, &["s1", "s2"]).as_slice());
        assert!(asy.check_associativity(&alg).passed);
        assert!(asy.check_psi_identity(&alg).passed);
        assert!(asy.check_bimodule(&alg).passed);
    }

    #[test]
    fn non_cell_is_rejected() {
        let alg = gen_hecke_kl(2).unwrap();
        let bogus = cell_of(&alg, &["s1", "s2"]);
        assert!(matches!(a_function(&alg, &bogus), Err(AsymptoticError::NotACell(_))));
    }

    #[test]
    fn p3_on_s3_and_a_values() {
        let alg = gen_hecke_kl(2).unwrap();
        let dec = two_sided_cells(&alg);
        let pre = lr_preorder(&alg);
        let asys: Vec<_> = dec
            .cells()
            .iter()
            .map(|c| AsymptoticAlgebra::build(&alg, &pre, c).unwrap())
            .collect();
        let mut a: Vec<i64> = asys.iter().map(|x| x.a_function().constant_value().unwrap()).collect();
        a.sort();
        assert_eq!(a, vec![0, 1, 3]);
        assert!(check_p3(&alg, &asys, 30, 0).passed);
    }

    #[test]
    fn infty_action_rejects_cross_cell() {
        let alg = gen_hecke_kl(1).unwrap();
        let cs = cell_of(&alg, &["s1"]);
        let asy = AsymptoticAlgebra::build(&alg, &lr_preorder(&alg), &cs).unwrap();
        let out = asy.infty_action(&alg, &t_basis(cs[0]), cs[0]).unwrap();
        assert_eq!(out.coeff(cs[0]), LaurentPoly::quantum_two());
        assert!(asy.infty_action(&alg, &t_basis(cs[0]), 0).is_err());
    }
}
