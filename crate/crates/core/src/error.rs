//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by estimators, system construction, and analyses.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation was called with an argument outside its contract.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A system could not be built from the given parameters.
    #[error("cannot construct system: {0}")]
    Construction(String),

    /// A compressor failed on the given input.
    #[error("estimator failure in compressor {compressor_id}: {message}")]
    Estimator {
        /// Identifier of the compressor that failed.
        compressor_id: String,
        /// Description of the failure.
        message: String,
    },

    /// No compressor is registered under the requested identifier.
    #[error("unknown compressor id: {0}")]
    UnknownCompressor(String),

    /// A stored-table system was queried beyond its stored domain.
    #[error("lookup range exhausted: input {input} is outside the stored range (side {side})")]
    RangeExhausted {
        /// The offending input.
        input: String,
        /// Largest operand value the table stores.
        side: u64,
    },

    /// The generator-aware interrogator does not cover this system kind.
    #[error("no oracle interrogator for system kind {0}")]
    UnsupportedOracle(String),

    /// A trace was requested from a system that has no transition function.
    #[error("system kind {0} is not iterative")]
    NotIterative(String),

    /// An input string could not be parsed for the target system.
    #[error("malformed input for {kind}: {message}")]
    MalformedInput {
        /// Kind of the system that rejected the input.
        kind: String,
        /// What went wrong.
        message: String,
    },

    /// Underlying I/O failure while reading or writing artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed JSON in a trace or report file.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
