//! Experiment registry, batch runner and CLI plumbing for `fogm`.

pub mod cli;
pub mod error;
pub mod experiment;
pub mod format;
pub mod registry;

pub use error::{BenchError, Result};
pub use experiment::{run_experiment, RunReport, Summary};
pub use registry::{lookup, registry, ConfigEntry, ExperimentSpec};
