use std::path::{Path, PathBuf};

use fogm::FogmError;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),

    #[error("{path}: {msg}")]
    Io { path: PathBuf, msg: String },

    #[error("json: {0}")]
    Json(String),

    #[error(transparent)]
    Core(#[from] FogmError),
}

impl BenchError {
    pub fn io(path: &Path, err: std::io::Error) -> Self {
        BenchError::Io {
            path: path.to_path_buf(),
            msg: err.to_string(),
        }
    }

    /// Process exit code: 1 for bad input, 2 for failures while running.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Invalid(_) | BenchError::UnknownExperiment(_) => 1,
            BenchError::Core(e) => match e {
                FogmError::InvalidConfig(_)
                | FogmError::DomainError(_)
                | FogmError::ObjectiveId { .. }
                | FogmError::MissingMetadata(_)
                | FogmError::NonEmptyRequired(_) => 1,
                _ => 2,
            },
            BenchError::Io { .. } | BenchError::Json(_) => 2,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
