//! Fractional-order gradient methods for convex optimization.
//!
//! The crate provides the plain gradient method (GM), the fractional-order
//! gradient method (FOGM) whose step is scaled by `|t_k - t_{k-1}|^(1-α)`,
//! its δ-regularized form, and a switching variant that starts with
//! `α < 1` and latches onto `α > 1` near the minimizer. Alongside the
//! optimizers live the closed-form convergence-region bound
//! `(ρμ)^(1/(α-p))`, the matching δ prescription, a trace classifier and
//! bisection-based estimation of the strong-convexity order.
//!
//! Everything numeric is generic over [`Scalar`] (`f32`/`f64`); the
//! aliases at the crate root fix `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod fracderiv;
pub mod io;
pub mod objective;
pub mod optimizers;
mod scalar;

pub use error::{FogmError, Result};
pub use scalar::Scalar;

pub type ScalarObjective = objective::ScalarObjective<f64>;
pub type VectorObjective = objective::VectorObjective<f64>;
pub type Polynomial = objective::Polynomial<f64>;
pub type OptimizerConfig = optimizers::OptimizerConfig<f64>;
pub type Trace = optimizers::Trace<f64>;
pub type VectorTrace = optimizers::VectorTrace<f64>;
pub type IterationRecord = optimizers::IterationRecord<f64>;
pub type ConvergenceReport = analysis::ConvergenceReport<f64>;
pub type FracSeriesSpec = fracderiv::FracSeriesSpec<f64>;

pub type ScalarObjective32 = objective::ScalarObjective<f32>;
pub type OptimizerConfig32 = optimizers::OptimizerConfig<f32>;
pub type Trace32 = optimizers::Trace<f32>;
