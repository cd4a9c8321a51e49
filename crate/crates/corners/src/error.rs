//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix entry was NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// Dimensions do not line up for the requested operation.
    #[error("shape mismatch: {context} (got {rows}x{cols})")]
    ShapeMismatch {
        context: &'static str,
        rows: usize,
        cols: usize,
    },

    /// A 2x2-block operation was asked of an odd-dimension matrix.
    #[error("block partition needs an even dimension, got {size}")]
    OddDimension { size: usize },

    /// Entry data length does not match rows * cols.
    #[error("entry count {len} does not match {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        len: usize,
    },

    /// A constructor precondition failed; names the first violated
    /// constraint together with the measured residual and the tolerance
    /// it was checked against.
    #[error("validation failed: {constraint} (residual {residual:.3e}, tolerance {tolerance:.3e})")]
    Validation {
        constraint: &'static str,
        residual: f64,
        tolerance: f64,
    },

    /// Input outside an operation's admissible domain (e.g. an empty
    /// subspace list, or a non-PSD matrix passed to a square root).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn validation(constraint: &'static str, residual: f64, tolerance: f64) -> Self {
        Error::Validation {
            constraint,
            residual,
            tolerance,
        }
    }
}
