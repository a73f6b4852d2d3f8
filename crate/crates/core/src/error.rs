//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the simulation pipeline.
///
/// The variants map onto the process exit codes used by the CLI:
/// configuration, input and domain problems exit with code 2, numerical
/// failures with code 3.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation
    /// (negative frequency, negative wind speed, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data is malformed or inconsistent (mismatched sampling,
    /// missing series, ragged CSV, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A scenario or parameter block violates the schema or an internal
    /// consistency rule. The message carries the offending field path.
    #[error("configuration error: {0}")]
    Config(String),

    /// A numerical procedure failed (non-finite factorization, ...).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The smoothing index is undefined because the member series has
    /// zero standard deviation.
    #[error("smoothing index undefined: member series has zero standard deviation")]
    UndefinedIndex,

    /// The curtailment ratio is undefined because the set point equals
    /// the initial power (zero denominator).
    #[error("curtailment ratio undefined: set point equals initial power")]
    UndefinedRatio,

    /// Filesystem failure while reading or writing pipeline artifacts.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Input(_) | Error::Config(_) | Error::UndefinedRatio => 2,
            Error::Numerical(_) | Error::UndefinedIndex => 3,
            Error::Io { .. } => 1,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
