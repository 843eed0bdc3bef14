//! Batch interface to the `azumaya` decision procedures: JSON documents in,
//! deterministic JSON reports out.

pub mod corpus;
pub mod document;
pub mod report;
pub mod run;
pub mod suite;

use azumaya::coalgebra::{dual_algebra, dual_coalgebra};
use thiserror::Error;

use document::{header, object_spec, Document, Object, RawDocument};

/// Problems with the input; reported with exit status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
    #[error("AZK_SEED: {0}")]
    Seed(String),
}

/// A one-object document presenting the dual of `name`: the dual coalgebra of
/// an algebra, or the convolution algebra of a coalgebra.
pub fn dualize(doc: &Document, name: &str) -> Result<RawDocument, InputError> {
    let object = doc.objects.get(name).ok_or_else(|| InputError::Invalid {
        field: "--object".into(),
        message: format!("undefined object `{name}`"),
    })?;
    let dual = match object {
        Object::Algebra(a) => dual_coalgebra(a).map(Object::Coalgebra),
        Object::Coalgebra(c) => dual_algebra(c).map(Object::Algebra),
    }
    .map_err(|e| InputError::Invalid {
        field: format!("objects.{name}"),
        message: e.to_string(),
    })?;
    let mut out = header(&doc.category);
    out.objects
        .insert(format!("{name}_dual"), object_spec(&dual));
    Ok(out)
}

/// Reads `AZK_SEED`, defaulting to 0.
pub fn seed_from_env() -> Result<u64, InputError> {
    match std::env::var("AZK_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| InputError::Seed(format!("`{s}` is not an unsigned integer"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(InputError::Seed(e.to_string())),
    }
}
