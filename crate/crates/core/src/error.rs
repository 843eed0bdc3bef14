use thiserror::Error;

use crate::graded::GradedError;
use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("structure constant ({i}, {j}, {k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("non-homogeneous structure: {0}")]
    NonHomogeneous(String),
    #[error("unit/counit has nonzero degree at basis vector {0}")]
    UnitDegree(usize),
    #[error("{law} fails: {witness}")]
    Axiom { law: &'static str, witness: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

/// Returns an `Inconsistency` error unless `cond` holds.
pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistency(what()))
    }
}
