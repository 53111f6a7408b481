//! Independent computations used to cross-check the engine: explicit
//! Chevalley bases for low-rank algebras and matrix realizations of the
//! holomorphic extensions.

use thiserror::Error;

use crate::maximal_group::OnishchikRow;
use crate::rootsys::SimpleLieType;

pub mod chevalley;
pub mod embedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no explicit basis for {0}")]
    UnsupportedRank(SimpleLieType),
    #[error("no matrix realization for row {row} at rank {ell}")]
    UnsupportedInstance { row: OnishchikRow, ell: usize },
    #[error("vectors do not span the expected subspace: {0}")]
    InvalidSpan(String),
    #[error("Levi form is degenerate")]
    DegenerateForm,
    #[error("inconsistent structure: {0}")]
    Inconsistent(String),
}
