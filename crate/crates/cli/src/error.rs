use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    MissingFile {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("invalid geometry in `{field}`: {source}")]
    Invariant { field: String, source: fddof::Error },

    #[error("sweep needs a symmetric base scenario: {0}")]
    BadSweep(String),

    #[error("{0}; pass --auto-rescale to scale the arrays automatically")]
    Quantization(fddof::Error),

    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::MissingFile { .. } | CliError::Output { .. } => 2,
            CliError::Schema { .. } | CliError::Usage(_) => 3,
            CliError::Invariant { .. } => 4,
            CliError::BadSweep(_) => 5,
            CliError::Quantization(_) => 6,
        }
    }
}

/// Exit status when every command step ran but a verification check failed.
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
