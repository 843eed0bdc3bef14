//! Exact decision procedures for Azumaya (co)algebras in categories of
//! graded vector spaces braided by a bicharacter.

pub mod algebra;
pub mod coalgebra;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod laws;
pub mod linalg;
pub mod random;
pub mod relative;

pub use error::{Error, Result};
