//! The gradient method and its fractional-order variants, with fully
//! instrumented traces.

mod config;
mod run;
mod step;
mod trace;

pub use config::{
    Method, OptimizerConfig, DEFAULT_MAX_ITER, DEFAULT_STATIONARY_WINDOW, DEFAULT_TOL_ABS,
};
pub use run::{divergence_threshold, run, run_vector};
pub use step::{fogm_step, gm_step, switching_policy, Phase, SwitchState};
pub use trace::{same_bits, IterationRecord, Termination, Trace, VectorRecord, VectorTrace};
