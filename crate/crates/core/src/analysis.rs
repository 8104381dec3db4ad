//! The full pipeline: cells, a-function, γ, P1 to P4, Ψ, realizations and the
//! cell chain, collected into a deterministic report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{BasedAlgebra, DEFAULT_MAX_EXHAUSTIVE_RANK};
use crate::asymptotic::{a_function_with, check_p3, distinguished_set, gamma_table, AsymptoticAlgebra};
use crate::cells::{check_involution_on_cells, lr_preorder, one_sided_cells, two_sided_cells, Side};
use crate::genmatrix::{assemble_cell_chain, derive_labeling, verify_affine_cell_ideal, verify_cell_realization, ChainReport, CellRealization};
use crate::verdict::Verdict;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// γ-table entries listed per cell in the report.
pub const GAMMA_EXCERPT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub max_exhaustive_rank: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            max_exhaustive_rank: DEFAULT_MAX_EXHAUSTIVE_RANK,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub units: Vec<String>,
    pub cells: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaEntry {
    pub left: String,
    pub right: String,
    pub result: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    /// 1-based position in the cell chain.
    pub position: usize,
    pub members: Vec<String>,
    pub a_values: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<Vec<String>>,
    /// Other valid distinguished sets, when the choice is not unique.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub distinguished_alternatives: Vec<Vec<String>>,
    pub gamma_entries: usize,
    pub gamma: Vec<GammaEntry>,
    /// Row and column (1-based) of each member.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<BTreeMap<String, (usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Vec<String>>>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraSummary,
    pub seed: u64,
    pub max_exhaustive_rank: usize,
    pub checks: Vec<Verdict>,
    pub cells: Vec<CellReport>,
    pub chain: ChainReport,
    pub passed: bool,
}

impl AnalysisReport {
    pub fn all_verdicts(&self) -> impl Iterator<Item = &Verdict> + '_ {
        self.checks
            .iter()
            .chain(self.cells.iter().flat_map(|c| c.verdicts.iter()))
            .chain(self.chain.verdicts.iter())
    }

    pub fn failures(&self) -> Vec<&Verdict> {
        self.all_verdicts().filter(|v| !v.passed).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let a = &self.algebra;
        let _ = writeln!(out, "algebra: {}", a.name.as_deref().unwrap_or("(unnamed)"));
        let _ = writeln!(out, "rank: {}", a.rank);
        let _ = writeln!(out, "units: {}", a.units.join(", "));
        let _ = writeln!(out, "two-sided cells: {}", a.cells);
        let _ = writeln!(out);
        for v in &self.checks {
            let _ = writeln!(out, "{v}");
        }
        for cell in &self.cells {
            let _ = writeln!(out);
            let _ = writeln!(out, "cell {} = {{{}}}", cell.position, cell.members.join(", "));
            let a_vals: Vec<String> = cell.a_values.iter().map(|(b, a)| format!("{b}:{a}")).collect();
            let _ = writeln!(out, "  a: {}", a_vals.join(" "));
            if let Some(d) = &cell.distinguished {
                let _ = writeln!(out, "  D_c: {{{}}}", d.join(", "));
            }
            for alt in &cell.distinguished_alternatives {
                let _ = writeln!(out, "  D_c alternative: {{{}}}", alt.join(", "));
            }
            if let Some(lab) = &cell.labeling {
                let entries: Vec<String> = lab.iter().map(|(b, (j, l))| format!("{b}=({j},{l})")).collect();
                let _ = writeln!(out, "  labels: {}", entries.join(" "));
            }
            if let Some(psi) = &cell.psi {
                let rows: Vec<String> = psi.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                let _ = writeln!(
                    out,
                    "  Ψ over {}: [{}]",
                    cell.base_ring.as_deref().unwrap_or("?"),
                    rows.join(", ")
                );
            }
            for v in &cell.verdicts {
                let _ = writeln!(out, "  {v}");
            }
        }
        let _ = writeln!(out);
        let layers: Vec<String> = self.chain.layers.iter().map(|l| format!("{{{}}}", l.cell.join(", "))).collect();
        let _ = writeln!(out, "cell chain: {}", layers.join(" < "));
        for v in &self.chain.verdicts {
            let _ = writeln!(out, "{v}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn labels(alg: &BasedAlgebra, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&b| alg.label(b).to_string()).collect()
}

/// Runs every check on `alg`. Failures are recorded in the report, never
/// returned as errors.
pub fn run_analysis(alg: &BasedAlgebra, options: AnalysisOptions) -> AnalysisReport {
    let mut checks = vec![
        alg.check_generalized_unit(),
        alg.check_involution(),
        alg.check_associativity(options.max_exhaustive_rank, options.seed),
    ];

    let pre = lr_preorder(alg);
    let dec = two_sided_cells(alg);
    let left = one_sided_cells(alg, Side::Left);
    let right = one_sided_cells(alg, Side::Right);

    let mut p1a = dec.check_chain_compatibility();
    p1a.check = "P1(a) finitely many cells, chain compatible with ⪯_LR".into();
    checks.push(p1a);
    checks.push(check_involution_on_cells(alg, &dec));

    let mut cells = Vec::new();
    let mut asys: Vec<AsymptoticAlgebra> = Vec::new();
    let mut gamma_missing = Vec::new();
    for (pos, cell) in dec.chain_cells().enumerate() {
        let j = pos + 1;
        let mut report = CellReport {
            position: j,
            members: labels(alg, cell),
            a_values: BTreeMap::new(),
            distinguished: None,
            distinguished_alternatives: Vec::new(),
            gamma_entries: 0,
            gamma: Vec::new(),
            labeling: None,
            base_ring: None,
            psi: None,
            verdicts: Vec::new(),
        };
        let af = match a_function_with(alg, &pre, cell) {
            Ok(af) => af,
            Err(e) => {
                report.verdicts.push(Verdict::fail("P1(b) a-function", e.to_string()));
                gamma_missing.push(alg.label(cell[0]).to_string());
                cells.push(report);
                continue;
            }
        };
        report.a_values = af.values().iter().map(|(&b, &a)| (alg.label(b).to_string(), a)).collect();
        report
            .verdicts
            .push(Verdict::pass("P1(b) a finite").with_note("finite table: a(b) bounded by within-cell degrees"));
        report.verdicts.push(af.check_constant_on_sectors(alg));

        let mut asy = match gamma_table(alg, cell, &af) {
            Ok(asy) => asy,
            Err(e) => {
                report.verdicts.push(Verdict::fail("γ degree bound", e.to_string()));
                gamma_missing.push(alg.label(cell[0]).to_string());
                cells.push(report);
                continue;
            }
        };
        report.verdicts.push(Verdict::pass("γ degree bound"));
        report.gamma_entries = asy.gamma_entries().count();
        report.gamma = asy
            .gamma_entries()
            .take(GAMMA_EXCERPT)
            .map(|(&(b, b2, b3), g)| GammaEntry {
                left: alg.label(b).into(),
                right: alg.label(b2).into(),
                result: alg.label(b3).into(),
                value: g.to_string(),
            })
            .collect();
        report.verdicts.push(asy.check_associativity(alg));

        match distinguished_set(&asy) {
            Ok(d) => {
                report.distinguished = Some(labels(alg, &d.chosen));
                report.distinguished_alternatives = d.all.iter().filter(|s| **s != d.chosen).map(|s| labels(alg, s)).collect();
                asy = asy.with_distinguished(d.chosen);
                report.verdicts.push(asy.check_generalized_unit(alg));
            }
            Err(e) => {
                report.verdicts.push(Verdict::fail("P2 generalized unit of A_c^∞", e.to_string()));
                asys.push(asy);
                cells.push(report);
                continue;
            }
        }

        report.verdicts.push(asy.check_bimodule(alg));
        report.verdicts.push(asy.check_psi_identity(alg));

        match derive_labeling(alg, &asy, &left, &right) {
            Ok(lab) => {
                report.labeling = Some(
                    lab.entries()
                        .iter()
                        .map(|(&b, &(r, c))| (alg.label(b).to_string(), (r + 1, c + 1)))
                        .collect(),
                );
                let real = CellRealization::new(alg, &asy, lab);
                report.base_ring = Some(format!("{} (trivial G_c)", crate::genmatrix::CommutativeRing::describe(real.algebra.ring())));
                report.psi = Some(real.psi_rendered());
                let mut p4 = verify_cell_realization(alg, &asy, &real.labeling, &real.algebra);
                p4.check = "P4 realization (M_n(k), Ψ_c)".into();
                report.verdicts.push(p4);
                report.verdicts.push(verify_affine_cell_ideal(alg, &dec, j, &asy, &real));
            }
            Err(e) => report.verdicts.push(Verdict::fail("P4(a) labeling", e.to_string())),
        }
        asys.push(asy);
        cells.push(report);
    }

    let mut p3 = check_p3(alg, &asys, options.max_exhaustive_rank, options.seed);
    if !gamma_missing.is_empty() {
        p3.record(format!("γ unavailable on the cells of {}", gamma_missing.join(", ")));
    }
    if alg.rank() > options.max_exhaustive_rank {
        p3 = p3.with_note("sampled quadruples");
    }
    checks.push(p3);

    let chain = assemble_cell_chain(alg, &dec);
    let mut report = AnalysisReport {
        algebra: AlgebraSummary {
            name: alg.name().map(str::to_string),
            rank: alg.rank(),
            units: labels(alg, alg.units()),
            cells: dec.len(),
        },
        seed: options.seed,
        max_exhaustive_rank: options.max_exhaustive_rank,
        checks,
        cells,
        chain,
        passed: false,
    };
    let passed = report.all_verdicts().all(|v| v.passed);
    report.passed = passed;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::gen_hecke_kl;

    #[test]
    fn s3_passes() {
        let alg = gen_hecke_kl(2).unwrap();
        let report = run_analysis(&alg, AnalysisOptions::default());
        assert!(report.passed, "{}", report.to_text());
        assert_eq!(report.cells.len(), 3);
    }

    #[test]
    fn deterministic_json() {
        let alg = gen_hecke_kl(2).unwrap();
        let a = run_analysis(&alg, AnalysisOptions::default()).to_json();
        let b = run_analysis(&alg, AnalysisOptions::default()).to_json();
        assert_eq!(a, b);
    }
}
