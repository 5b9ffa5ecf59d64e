//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Dense vectors and matrices are capped at eight qubits (256 states).
    #[error("dimension {dim} exceeds the {max}-state limit")]
    DimensionOverflow { dim: usize, max: usize },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("not a density matrix: {reason}")]
    NotDensity { reason: String },

    #[error("invalid gate: {reason}")]
    InvalidGate { reason: String },

    #[error("invalid partial trace: {reason}")]
    InvalidTrace { reason: String },

    /// A machine parameter fell outside its legal interval.
    #[error("{param} = {value} outside [{lo}, {hi}]")]
    Domain {
        param: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("operation requires {expected} qubit(s), got {got}")]
    QubitCount { expected: usize, got: usize },

    /// Script parse error with 1-based source position.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Malformed command-line value (usage error, not a domain error).
    #[error("invalid argument: {0}")]
    BadArgument(String),

    #[error("diagram has {states} states, renderer limit is {max}")]
    RenderLimit { states: usize, max: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 for usage/parse errors, 2 for
    /// domain and environment errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::BadArgument(_) => 1,
            _ => 2,
        }
    }
}
