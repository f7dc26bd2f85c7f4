//! Exact generalized inverses of square matrices: G-Drazin, GD1 and 1GD
//! inverses, the core-nilpotent machinery behind them, and decision
//! procedures for the matrix partial orders they induce.
//!
//! Everything runs over exact fields: Q, the Gaussian rationals Q(i) and
//! prime fields GF(p).

pub mod decomp;
pub mod document;
pub mod error;
pub mod family;
pub mod field;
pub mod fixtures;
pub mod inverses;
pub mod linalg;
pub mod orders;
pub mod replay;
pub mod rng;

pub use error::{Error, Result};
pub use field::{FieldTag, Scalar};
pub use linalg::Matrix;
