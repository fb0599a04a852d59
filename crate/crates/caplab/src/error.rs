use thiserror::Error;

/// Errors produced by validation and by operations on mismatched objects.
///
/// Numerical non-convergence is never an error; optimizers flag it in their
/// result instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("not a density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid pure state: {0}")]
    InvalidPureState(String),

    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    #[error("trace preservation violated, deviation {0}")]
    NotTracePreserving(f64),

    #[error("invalid Choi matrix: {0}")]
    InvalidChoi(String),

    #[error("unknown channel family '{0}'")]
    UnknownFamily(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("ensemble member {index} is not pure (largest eigenvalue {largest})")]
    NotPure { index: usize, largest: f64 },

    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
}
