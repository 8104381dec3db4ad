//! Slow, independent reference computations for tests.
//!
//! Nothing here shares code with the algorithms it checks beyond the Laurent
//! polynomial type and the table format.

pub mod hecke;
pub mod ideals;
pub mod periodic;
pub mod schur;
pub mod segments;
