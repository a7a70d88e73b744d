use thiserror::Error;

/// Errors raised by objectives, series evaluation, optimizers and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FogmError {
    #[error("non-finite value encountered: {0}")]
    NonFiniteValue(String),

    #[error("a nonempty input is required: {0}")]
    NonEmptyRequired(&'static str),

    #[error("argument outside the domain: {0}")]
    DomainError(String),

    #[error("singular step multiplier at iteration {k}: zero increment with alpha > 1 and delta = 0")]
    SingularStep { k: usize },

    #[error("objective metadata missing: {0}")]
    MissingMetadata(&'static str),

    #[error("order bracket [{lo}, {hi}] does not bracket the oscillation threshold: {reason}")]
    BracketingFailed { lo: f64, hi: f64, reason: String },

    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),

    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot parse objective id `{id}`: {reason}")]
    ObjectiveId { id: String, reason: String },

    #[error("malformed trace data: {0}")]
    Format(String),

    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T, E = FogmError> = std::result::Result<T, E>;
