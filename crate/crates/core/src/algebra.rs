//! Finite based algebras over `k = Z[v, v^-1]`.
//!
//! A [`BasedAlgebra`] has a finite labelled basis `B`, a generalized unit
//! `X ⊆ B` of orthogonal idempotents `1_λ`, a sector `(λ, λ')` per basis
//! element (the unique `1_λ A 1_λ'` containing it), a full table of structure
//! constants and a basis-permuting involution `ι`.
//!
//! Loading validates the schema, sector consistency of every nonzero
//! structure constant and the unit orthogonality `1_λ 1_λ' = δ 1_λ`. The
//! remaining axioms (sector decomposition, identity action, anti-automorphism,
//! associativity) are reported as [`Verdict`]s so that a defective table can
//! still be analysed and its defect located.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::verdict::Verdict;

/// Default rank up to which triple-based checks are exhaustive.
pub const DEFAULT_MAX_EXHAUSTIVE_RANK: usize = 30;
/// Number of sampled triples above the exhaustive rank.
pub const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("i/o error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed table document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("sector inconsistency at ({left}, {right}, {result}): {detail}")]
    SectorInconsistency {
        left: String,
        right: String,
        result: String,
        detail: String,
    },
    #[error("generalized unit axiom fails for ({left}, {right}): {detail}")]
    UnitAxiom {
        left: String,
        right: String,
        detail: String,
    },
}

/// A finitely supported `k`-combination of basis elements, keyed by basis
/// index. No zero coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: usize) -> Self {
        Self::term(b, LaurentPoly::one())
    }

    pub fn term(b: usize, c: LaurentPoly) -> Self {
        let mut x = Self::zero();
        x.add_term(b, &c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, LaurentPoly)>) -> Self {
        let mut x = Self::zero();
        for (b, c) in terms {
            x.add_term(b, &c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, b: usize) -> Option<&LaurentPoly> {
        self.coeffs.get(&b)
    }

    pub fn coeff(&self, b: usize) -> LaurentPoly {
        self.coeffs.get(&b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn add_term(&mut self, b: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    /// `self += c * x`.
    pub fn add_scaled(&mut self, x: &AlgebraElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (b, xc) in &x.coeffs {
            self.add_term(*b, &(xc * c));
        }
    }

    pub fn add_assign(&mut self, x: &AlgebraElement) {
        for (b, c) in &x.coeffs {
            self.add_term(*b, c);
        }
    }

    pub fn sub_assign(&mut self, x: &AlgebraElement) {
        for (b, c) in &x.coeffs {
            self.add_term(*b, &-c);
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Keeps only the coefficients whose basis index satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Applies a basis relabelling `b -> map(b)`.
    pub fn permuted(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(b, c)| (map(*b), c.clone())))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.coeffs.iter().map(|(b, c)| (b, c.to_string())))
            .finish()
    }
}

/// On-disk table document (JSON).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub basis: Vec<String>,
    pub units: Vec<String>,
    #[serde(default)]
    pub sector: BTreeMap<String, [String; 2]>,
    pub involution: BTreeMap<String, String>,
    #[serde(default)]
    pub products: Vec<ProductRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductRecord {
    pub left: String,
    pub right: String,
    pub result: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub basis: String,
    pub coeff: LaurentPoly,
}

impl TableDocument {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table documents always serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug)]
pub struct BasedAlgebra {
    name: Option<String>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    units: Vec<usize>,
    sector: Vec<Option<(usize, usize)>>,
    involution: Vec<usize>,
    /// `products[b][b']` is the expansion of `b * b'`.
    products: Vec<Vec<AlgebraElement>>,
}

/// Raw ingredients for [`BasedAlgebra::new`], all indices into `labels`.
#[derive(Clone, Debug, Default)]
pub struct AlgebraParts {
    pub name: Option<String>,
    pub labels: Vec<String>,
    pub units: Vec<usize>,
    pub sector: Vec<Option<(usize, usize)>>,
    pub involution: Vec<usize>,
    pub products: Vec<Vec<AlgebraElement>>,
}

impl BasedAlgebra {
    /// Validates and assembles an algebra from index-based parts.
    pub fn new(parts: AlgebraParts) -> Result<Self, AlgebraError> {
        let AlgebraParts {
            name,
            labels,
            units,
            sector,
            involution,
            products,
        } = parts;
        let rank = labels.len();
        let schema = |msg: String| Err(AlgebraError::Schema(msg));

        let mut index = HashMap::with_capacity(rank);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return schema(format!("basis label #{i} is empty"));
            }
            if index.insert(l.clone(), i).is_some() {
                return schema(format!("duplicate basis label `{l}`"));
            }
        }
        if sector.len() != rank || involution.len() != rank || products.len() != rank {
            return schema("sector, involution and product tables must cover the basis".into());
        }
        if products.iter().any(|row| row.len() != rank) {
            return schema("product table is not square".into());
        }
        if units.is_empty() && rank > 0 {
            return schema("the generalized unit set X is empty".into());
        }
        let unit_set: BTreeSet<usize> = units.iter().copied().collect();
        if unit_set.len() != units.len() {
            return schema("duplicate unit label".into());
        }
        for &u in &units {
            if u >= rank {
                return schema(format!("unit index {u} out of range"));
            }
        }

        let alg = Self {
            name,
            labels,
            index,
            units,
            sector,
            involution,
            products,
        };

        for b in 0..rank {
            let ib = alg.involution[b];
            if ib >= rank {
                return schema(format!("involution of `{}` out of range", alg.labels[b]));
            }
            if alg.involution[ib] != b {
                return schema(format!(
                    "involution is not an involution: `{}` -> `{}` -> `{}`",
                    alg.labels[b],
                    alg.labels[ib],
                    alg.labels[alg.involution[ib]]
                ));
            }
            if let Some((l, r)) = alg.sector[b] {
                if !unit_set.contains(&l) || !unit_set.contains(&r) {
                    return schema(format!("sector of `{}` names a non-unit", alg.labels[b]));
                }
            }
        }
        for &u in &alg.units {
            if alg.sector[u] != Some((u, u)) {
                return schema(format!("unit `{}` must lie in its own sector ({0}, {0})", alg.labels[u]));
            }
            if !unit_set.contains(&alg.involution[u]) {
                return schema(format!(
                    "involution sends unit `{}` to non-unit `{}`",
                    alg.labels[u],
                    alg.labels[alg.involution[u]]
                ));
            }
        }
        for (b, row) in alg.products.iter().enumerate() {
            for (b2, prod) in row.iter().enumerate() {
                for r in prod.support() {
                    if r >= rank {
                        return schema(format!("product result index {r} out of range"));
                    }
                    alg.check_sector_triple(b, b2, r)?;
                }
            }
        }
        for &u in &alg.units {
            for &w in &alg.units {
                let prod = &alg.products[u][w];
                let expected = if u == w {
                    AlgebraElement::basis(u)
                } else {
                    AlgebraElement::zero()
                };
                if *prod != expected {
                    return Err(AlgebraError::UnitAxiom {
                        left: alg.labels[u].clone(),
                        right: alg.labels[w].clone(),
                        detail: format!(
                            "product is {} but must be {}",
                            alg.render(prod),
                            alg.render(&expected)
                        ),
                    });
                }
            }
        }
        Ok(alg)
    }

    fn check_sector_triple(&self, b: usize, b2: usize, r: usize) -> Result<(), AlgebraError> {
        let (Some((l1, r1)), Some((l2, r2)), Some((l3, r3))) =
            (self.sector[b], self.sector[b2], self.sector[r])
        else {
            return Ok(());
        };
        let detail = if r1 != l2 {
            Some(format!(
                "right sector {} of the left factor differs from left sector {} of the right factor",
                self.labels[r1], self.labels[l2]
            ))
        } else if l3 != l1 || r3 != r2 {
            Some(format!(
                "result lies in ({}, {}) but the product lies in ({}, {})",
                self.labels[l3], self.labels[r3], self.labels[l1], self.labels[r2]
            ))
        } else {
            None
        };
        match detail {
            None => Ok(()),
            Some(detail) => Err(AlgebraError::SectorInconsistency {
                left: self.labels[b].clone(),
                right: self.labels[b2].clone(),
                result: self.labels[r].clone(),
                detail,
            }),
        }
    }

    pub fn from_document(doc: &TableDocument) -> Result<Self, AlgebraError> {
        let rank = doc.basis.len();
        let mut index = HashMap::with_capacity(rank);
        for (i, l) in doc.basis.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(AlgebraError::Schema(format!("duplicate basis label `{l}`")));
            }
        }
        let lookup = |label: &str, ctx: &str| -> Result<usize, AlgebraError> {
            index
                .get(label)
                .copied()
                .ok_or_else(|| AlgebraError::Schema(format!("unknown basis label `{label}` in {ctx}")))
        };

        let units = doc
            .units
            .iter()
            .map(|u| lookup(u, "units"))
            .collect::<Result<Vec<_>, _>>()?;

        let mut sector = vec![None; rank];
        for (b, [l, r]) in &doc.sector {
            let bi = lookup(b, "sector")?;
            sector[bi] = Some((lookup(l, "sector")?, lookup(r, "sector")?));
        }

        let mut involution = vec![usize::MAX; rank];
        for (b, ib) in &doc.involution {
            involution[lookup(b, "involution")?] = lookup(ib, "involution")?;
        }
        if let Some(missing) = involution.iter().position(|&x| x == usize::MAX) {
            return Err(AlgebraError::Schema(format!(
                "involution has no image for `{}`",
                doc.basis[missing]
            )));
        }

        let mut products = vec![vec![AlgebraElement::zero(); rank]; rank];
        let mut seen = BTreeSet::new();
        for rec in &doc.products {
            let l = lookup(&rec.left, "products")?;
            let r = lookup(&rec.right, "products")?;
            if !seen.insert((l, r)) {
                return Err(AlgebraError::Schema(format!(
                    "duplicate product record ({}, {})",
                    rec.left, rec.right
                )));
            }
            let mut terms = BTreeSet::new();
            for t in &rec.result {
                let bi = lookup(&t.basis, "products")?;
                if !terms.insert(bi) {
                    return Err(AlgebraError::Schema(format!(
                        "basis `{}` repeated in product ({}, {})",
                        t.basis, rec.left, rec.right
                    )));
                }
                products[l][r].add_term(bi, &t.coeff);
            }
        }

        Self::new(AlgebraParts {
            name: doc.name.clone(),
            labels: doc.basis.clone(),
            units,
            sector,
            involution,
            products,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        Self::from_document(&TableDocument::from_json(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, AlgebraError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| AlgebraError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_document(&self) -> TableDocument {
        let label = |i: usize| self.labels[i].clone();
        let mut products = Vec::new();
        for (l, row) in self.products.iter().enumerate() {
            for (r, prod) in row.iter().enumerate() {
                if prod.is_zero() {
                    continue;
                }
                products.push(ProductRecord {
                    left: label(l),
                    right: label(r),
                    result: prod
                        .iter()
                        .map(|(b, c)| TermRecord {
                            basis: label(b),
                            coeff: c.clone(),
                        })
                        .collect(),
                });
            }
        }
        TableDocument {
            name: self.name.clone(),
            basis: self.labels.clone(),
            units: self.units.iter().map(|&u| label(u)).collect(),
            sector: self
                .sector
                .iter()
                .enumerate()
                .filter_map(|(b, s)| s.map(|(l, r)| (label(b), [label(l), label(r)])))
                .collect(),
            involution: (0..self.rank())
                .map(|b| (label(b), label(self.involution[b])))
                .collect(),
            products,
        }
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, b: usize) -> bool {
        self.units.contains(&b)
    }

    /// Declared sector `(λ(b), λ'(b))` as unit basis indices.
    pub fn sector(&self, b: usize) -> Option<(usize, usize)> {
        self.sector[b]
    }

    pub fn involution(&self, b: usize) -> usize {
        self.involution[b]
    }

    pub fn involution_map(&self) -> &[usize] {
        &self.involution
    }

    /// Expansion of `b * b'`.
    pub fn product(&self, b: usize, b2: usize) -> &AlgebraElement {
        &self.products[b][b2]
    }

    /// The structure constant `c_{b,b'}^{b''}`.
    pub fn structure_constant(&self, b: usize, b2: usize, b3: usize) -> LaurentPoly {
        self.products[b][b2].coeff(b3)
    }

    pub fn structure_constant_ref(&self, b: usize, b2: usize, b3: usize) -> Option<&LaurentPoly> {
        self.products[b][b2].get(b3)
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, xc) in x.iter() {
            for (b2, yc) in y.iter() {
                let prod = &self.products[b][b2];
                if prod.is_zero() {
                    continue;
                }
                let c = xc * yc;
                out.add_scaled(prod, &c);
            }
        }
        out
    }

    /// Applies the involution `ι` linearly (coefficients are untouched).
    pub fn apply_involution(&self, x: &AlgebraElement) -> AlgebraElement {
        x.permuted(|b| self.involution[b])
    }

    /// Renders an element as `c*b + ...` using basis labels.
    pub fn render(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(b, c)| {
                if c.is_one() {
                    self.labels[b].clone()
                } else {
                    format!("({c})*{}", self.labels[b])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn element_from_labels(&self, terms: &[(&str, LaurentPoly)]) -> Option<AlgebraElement> {
        let mut x = AlgebraElement::zero();
        for (l, c) in terms {
            x.add_term(self.index_of(l)?, c);
        }
        Some(x)
    }

    /// Sum of all generalized units.
    pub fn unit_sum(&self) -> AlgebraElement {
        AlgebraElement::from_terms(self.units.iter().map(|&u| (u, LaurentPoly::one())))
    }

    /// Generalized-unit axioms: orthogonality, sector decomposition with
    /// uniquely determined sectors, and two-sided identity action of `Σ 1_λ`.
    pub fn check_generalized_unit(&self) -> Verdict {
        let mut verdict = Verdict::new("generalized unit");
        for &u in &self.units {
            for &w in &self.units {
                let expected = if u == w {
                    AlgebraElement::basis(u)
                } else {
                    AlgebraElement::zero()
                };
                if self.products[u][w] != expected {
                    verdict.record(format!(
                        "{} * {} = {} (orthogonality)",
                        self.labels[u],
                        self.labels[w],
                        self.render(&self.products[u][w])
                    ));
                }
            }
        }
        let unit_sum = self.unit_sum();
        for b in 0..self.rank() {
            let this = AlgebraElement::basis(b);
            let left: Vec<usize> = self
                .units
                .iter()
                .copied()
                .filter(|&u| self.products[u][b] == this)
                .collect();
            let right: Vec<usize> = self
                .units
                .iter()
                .copied()
                .filter(|&u| self.products[b][u] == this)
                .collect();
            let left_clean = self
                .units
                .iter()
                .all(|&u| left.contains(&u) || self.products[u][b].is_zero());
            let right_clean = self
                .units
                .iter()
                .all(|&u| right.contains(&u) || self.products[b][u].is_zero());
            match (left.as_slice(), right.as_slice()) {
                ([l], [r]) if left_clean && right_clean => {
                    if let Some(declared) = self.sector[b] {
                        if declared != (*l, *r) {
                            verdict.record(format!(
                                "{} declared in sector ({}, {}) but lies in ({}, {})",
                                self.labels[b],
                                self.labels[declared.0],
                                self.labels[declared.1],
                                self.labels[*l],
                                self.labels[*r]
                            ));
                        }
                    } else {
                        verdict.record(format!("{} has no declared sector", self.labels[b]));
                    }
                }
                _ => verdict.record(format!("{} lies in no unique sector 1_λ A 1_λ'", self.labels[b])),
            }
            let lhs = self.multiply(&unit_sum, &this);
            let rhs = self.multiply(&this, &unit_sum);
            if lhs != this || rhs != this {
                verdict.record(format!(
                    "Σ1_λ does not act as identity on {}: left {} , right {}",
                    self.labels[b],
                    self.render(&lhs),
                    self.render(&rhs)
                ));
            }
        }
        verdict
    }

    /// Whether `ι` extends to an anti-automorphism:
    /// `c_{b,b'}^{b''} = c_{ι b', ι b}^{ι b''}` for every triple.
    pub fn check_involution(&self) -> Verdict {
        let mut verdict = Verdict::new("involution is an anti-automorphism");
        for b in 0..self.rank() {
            if self.involution[self.involution[b]] != b {
                verdict.record(format!("ι² ≠ id at {}", self.labels[b]));
            }
        }
        for b in 0..self.rank() {
            for b2 in 0..self.rank() {
                let lhs = &self.products[b][b2];
                let rhs = &self.products[self.involution[b2]][self.involution[b]];
                let mapped = self.apply_involution(lhs);
                if mapped == *rhs {
                    continue;
                }
                let mut targets: BTreeSet<usize> = lhs.support().collect();
                targets.extend(rhs.support().map(|x| self.involution[x]));
                for b3 in targets {
                    let c1 = lhs.coeff(b3);
                    let c2 = rhs.coeff(self.involution[b3]);
                    if c1 != c2 {
                        verdict.record(format!(
                            "c[{},{}->{}] = {} but c[{},{}->{}] = {}",
                            self.labels[b],
                            self.labels[b2],
                            self.labels[b3],
                            c1,
                            self.labels[self.involution[b2]],
                            self.labels[self.involution[b]],
                            self.labels[self.involution[b3]],
                            c2
                        ));
                    }
                }
            }
        }
        verdict
    }

    /// `(b b') b'' = b (b' b'')`, exhaustively up to `max_exhaustive_rank`
    /// and on [`SAMPLED_TRIPLES`] seeded random triples beyond.
    pub fn check_associativity(&self, max_exhaustive_rank: usize, seed: u64) -> Verdict {
        let mut verdict = Verdict::new("associativity");
        let n = self.rank();
        let check = |a: usize, b: usize, c: usize, verdict: &mut Verdict| {
            let left = self.multiply(&self.products[a][b], &AlgebraElement::basis(c));
            let right = self.multiply(&AlgebraElement::basis(a), &self.products[b][c]);
            if left != right {
                verdict.record(format!(
                    "({} {}) {} = {} but {} ({} {}) = {}",
                    self.labels[a],
                    self.labels[b],
                    self.labels[c],
                    self.render(&left),
                    self.labels[a],
                    self.labels[b],
                    self.labels[c],
                    self.render(&right)
                ));
            }
        };
        if n <= max_exhaustive_rank {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c, &mut verdict);
                    }
                }
            }
        } else if n > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                check(a, b, c, &mut verdict);
            }
            verdict = verdict.with_note(format!("sampled {SAMPLED_TRIPLES} triples (seed {seed})"));
        }
        verdict
    }

    /// Returns a copy with one structure constant replaced; used to build
    /// corrupted fixtures. Sector validation is re-run.
    pub fn with_structure_constant(
        &self,
        b: usize,
        b2: usize,
        b3: usize,
        value: LaurentPoly,
    ) -> Result<Self, AlgebraError> {
        let mut products = self.products.clone();
        let current = products[b][b2].coeff(b3);
        products[b][b2].add_term(b3, &(&value - &current));
        Self::new(AlgebraParts {
            name: self.name.clone(),
            labels: self.labels.clone(),
            units: self.units.clone(),
            sector: self.sector.clone(),
            involution: self.involution.clone(),
            products,
        })
    }

    /// Returns a copy with a different involution.
    pub fn with_involution(&self, involution: Vec<usize>) -> Result<Self, AlgebraError> {
        Self::new(AlgebraParts {
            name: self.name.clone(),
            labels: self.labels.clone(),
            units: self.units.clone(),
            sector: self.sector.clone(),
            involution,
            products: self.products.clone(),
        })
    }
}
