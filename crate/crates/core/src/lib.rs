//! Machine-checked affine cellular structure for based algebras over
//! `Z[v, v^-1]`.
//!
//! The pipeline runs bottom-up: [`laurent`] arithmetic, [`algebra`] tables,
//! [`cells`] (two-sided, left and right cells with a cell chain),
//! [`asymptotic`] (a-function, γ-constants, distinguished sets, the bimodule
//! action and the form element Ψ), and [`genmatrix`] (generalized matrix
//! algebras, cell realizations, cell chains and affine cell ideals).
//! [`repring`] supplies representation rings of products of general linear
//! groups, and [`corpus`] generates Hecke and q-Schur tables together with
//! periodic-matrix and multisegment combinatorics. [`analysis`] ties it all
//! together into a deterministic report.

pub mod algebra;
pub mod analysis;
pub mod asymptotic;
pub mod cells;
pub mod corpus;
pub mod genmatrix;
pub mod laurent;
pub mod repring;
pub mod verdict;

pub use algebra::{AlgebraElement, AlgebraError, BasedAlgebra, TableDocument};
pub use laurent::LaurentPoly;
pub use verdict::Verdict;
