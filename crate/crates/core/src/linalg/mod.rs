//! Exact arithmetic over ℚ and `F_p`, and dense linear algebra on top of it.
//!
//! Every morphism in the rest of the crate is ultimately a [`Matrix`]; tensor
//! products use the row-major index convention `index(i, j) = i·dim₂ + j`.

mod matrix;
mod scalar;

pub use matrix::{Matrix, Rref, Vector};
pub use scalar::{is_prime, Field, Scalar, MAX_PRIME};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("p not prime: {0}")]
    NotPrime(u64),
    #[error("prime {0} exceeds 2^61")]
    PrimeTooLarge(u64),
    #[error("cannot parse scalar {0:?}")]
    ScalarParse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}
