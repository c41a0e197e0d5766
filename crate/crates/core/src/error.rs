use thiserror::Error;

/// Errors raised by the combinatorial layer.
///
/// Refusals are explicit: a computation whose hypotheses are not met never
/// returns a best-effort answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    #[error("root out of range: embedding {embedding}, positions ({i}, {k})")]
    RootOutOfRange {
        embedding: usize,
        i: usize,
        k: usize,
    },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("{what} must be {required}-deep, but is only {actual}-deep")]
    Depth {
        what: &'static str,
        required: i64,
        actual: i64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconclusive region: {0}")]
    Inconclusive(String),

    #[error("enumeration budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: &'static str,
        needed: usize,
        budget: usize,
    },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("weight is not eliminable: it lies in the predicted set")]
    NotEliminable,

    #[error("certificate check failed: {0}")]
    Certificate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
