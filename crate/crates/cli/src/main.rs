use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use affcell::algebra::DEFAULT_MAX_EXHAUSTIVE_RANK;
use affcell::analysis::{run_analysis, AnalysisOptions, DEFAULT_SEED};
use affcell::corpus::periodic::PeriodicMatrixDocument;
use affcell::corpus::{enumerate_segments, gen_hecke_kl, gen_qschur, wp_partition, PeriodicMatrix};
use affcell::repring::{lr_coefficient, IrrLabel, RepRing};
use affcell::BasedAlgebra;
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

/// Checks and constructs affine cellular structure of based algebras.
#[derive(Parser)]
#[command(name = "affcell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a structure-constant table.
    Analyze {
        table: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_EXHAUSTIVE_RANK)]
        max_exhaustive_rank: usize,
    },
    /// Generate a corpus table.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Littlewood–Richardson coefficient c_{λμ}^ν.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// d_A of a periodic matrix document.
    Dstat {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multisegments of total length r with at most n segments.
    Segments {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated center labels.
        #[arg(long)]
        alphabet: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decompose a tensor product of irreducibles, e.g. `--left 1,0 --right 0,-1`.
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Dual of an irreducible label.
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Hecke algebra of S_{rank+1} in the Kazhdan–Lusztig basis.
    Hecke {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Finite q-Schur algebra S(n, r).
    Qschur {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failed checks, as opposed to bad input.
struct ChecksFailed;

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad partition `{s}`")))
        .collect::<Result<Vec<_>>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        bail!("`{s}` is not weakly decreasing");
    }
    Ok(parts)
}

fn run(cli: Cli) -> Result<std::result::Result<(), ChecksFailed>> {
    match cli.command {
        Command::Analyze {
            table,
            out,
            format,
            seed,
            max_exhaustive_rank,
        } => {
            let alg = BasedAlgebra::load(&table).with_context(|| format!("loading {}", table.display()))?;
            let report = run_analysis(&alg, AnalysisOptions { seed, max_exhaustive_rank });
            let text = match format {
                Format::Text => report.to_text(),
                Format::Structured => report.to_json(),
            };
            emit(&text, out.as_deref())?;
            if out.is_some() {
                println!("overall: {}", if report.passed { "PASS" } else { "FAIL" });
            }
            for v in report.failures() {
                eprintln!("{v}");
            }
            return Ok(if report.passed { Ok(()) } else { Err(ChecksFailed) });
        }
        Command::Gen { kind } => {
            let (alg, out) = match kind {
                GenKind::Hecke { rank, out } => (gen_hecke_kl(rank)?, out),
                GenKind::Qschur { n, r, out } => (gen_qschur(n, r)?, out),
            };
            emit(&alg.to_json(), out.as_deref())?;
        }
        Command::Lr { lambda, mu, nu } => {
            let (l, m, n) = (parse_partition(&lambda)?, parse_partition(&mu)?, parse_partition(&nu)?);
            println!("{}", lr_coefficient(&l, &m, &n));
        }
        Command::Dstat { file, format } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let doc: PeriodicMatrixDocument = serde_json::from_str(&text).context("parsing periodic matrix")?;
            let a = PeriodicMatrix::from_document(&doc)?;
            match format {
                Format::Text => {
                    println!("d_A = {}", a.d_stat());
                    println!("r(A) = {:?}", a.row_sums());
                    println!("c(A) = {:?}", a.col_sums());
                }
                Format::Structured => {
                    let value = serde_json::json!({
                        "d_A": a.d_stat(),
                        "row_sums": a.row_sums(),
                        "col_sums": a.col_sums(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
            }
        }
        Command::Segments { r, n, alphabet, format } => {
            let letters: Vec<&str> = alphabet.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if letters.is_empty() {
                bail!("alphabet is empty");
            }
            let all = enumerate_segments(r, n, &letters);
            match format {
                Format::Text => {
                    println!("{} multisegments", all.len());
                    for ms in &all {
                        println!("{ms}  ℘ = {:?}", wp_partition(ms));
                    }
                }
                Format::Structured => println!("{}", serde_json::to_string_pretty(&all)?),
            }
        }
        Command::Tensor { left, right } => {
            let s: IrrLabel = left.parse()?;
            let t: IrrLabel = right.parse()?;
            let ring = RepRing::new(s.shape());
            for (u, c) in ring.tensor_decompose(&s, &t)?.terms() {
                println!("{c} {u}");
            }
        }
        Command::Dual { weight } => {
            let s: IrrLabel = weight.parse()?;
            println!("{}", s.dual());
        }
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(ChecksFailed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
