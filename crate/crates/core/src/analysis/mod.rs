//! Convergence-region bounds, the regularizer prescription, trace
//! classification and empirical order estimation.

mod bounds;
mod classify;
mod order;

pub use bounds::{recommend_delta, theoretical_bound};
pub use classify::{
    classify, crossings, Classification, Classifier, ConvergenceReport, Crossings, DEFAULT_WINDOW,
};
pub use order::{
    estimate_convexity_order, estimate_lipschitz_order, LipschitzEstimate, OrderEstimate,
    SampleRegion,
};
