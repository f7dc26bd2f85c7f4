use thiserror::Error;

use crate::field::FieldTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("cannot parse {text:?} as an element of {field}: {reason}")]
    Parse {
        text: String,
        field: FieldTag,
        reason: &'static str,
    },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid similarity: {0}")]
    InvalidSimilarity(String),

    #[error("missing value for parameter {0}")]
    MissingParameter(String),

    #[error("unknown parameter {0}")]
    UnknownParameter(String),

    #[error("enumeration needs a finite field, got {0}")]
    NotFinite(FieldTag),

    #[error("enumeration would produce {count} members, cap is {cap}")]
    CapExceeded { count: u128, cap: u128 },

    /// An internal consistency check failed. Always a bug.
    #[error("internal invariant broken: {0}")]
    Invariant(String),

    #[error("malformed document: {0}")]
    Document(String),
}
