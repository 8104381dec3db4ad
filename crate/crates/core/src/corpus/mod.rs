//! Generators for test algebras and the combinatorics of periodic matrices
//! and multisegments.

pub mod hecke;
pub mod periodic;
pub mod perm;
pub mod qschur;
pub mod segments;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use hecke::{gen_hecke_kl, HeckeKl};
pub use periodic::PeriodicMatrix;
pub use perm::{CoxeterElement, Perm, SymmetricGroup};
pub use qschur::{gen_qschur, young_longest_idempotent, QSchur};
pub use segments::{enumerate_segments, wp_partition, Multisegment, Segment};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("Hecke corpus supports 1 to 4 generators (S_2 to S_5), got {0}")]
    UnsupportedHeckeRank(usize),
    #[error("q-Schur corpus supports 1 <= n <= 3 and 1 <= r <= 3, got n = {n}, r = {r}")]
    UnsupportedQSchur { n: usize, r: usize },
    #[error("{0:?} is not a composition matching the algebra")]
    InvalidComposition(Vec<usize>),
    #[error("product of {left} and {right} is not a combination of orbit sums")]
    NotInOrbitSpan { left: String, right: String },
    #[error("invalid periodic matrix: {0}")]
    InvalidPeriodicMatrix(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
