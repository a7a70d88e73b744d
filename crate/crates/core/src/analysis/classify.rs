use serde::{Deserialize, Serialize};

use crate::optimizers::{Termination, Trace};
use crate::scalar::Scalar;

pub const DEFAULT_WINDOW: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Asymptotic,
    BoundedOscillation,
    Diverged,
    Inconclusive,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Asymptotic => "asymptotic",
            Classification::BoundedOscillation => "bounded_oscillation",
            Classification::Diverged => "diverged",
            Classification::Inconclusive => "inconclusive",
        }
    }
}

/// `oscillation_amplitude` is set exactly when the classification is
/// `BoundedOscillation`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport<T> {
    pub classification: Classification,
    pub final_error: T,
    pub oscillation_amplitude: Option<T>,
    pub crossing_count: usize,
    pub theoretical_bound: Option<T>,
}

impl<T> ConvergenceReport<T> {
    pub fn with_bound(mut self, bound: Option<T>) -> Self {
        self.theoretical_bound = bound;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossings {
    pub count: usize,
    /// Record indices `k` with `f'(t_k) f'(t_{k+1}) < 0`.
    pub indices: Vec<usize>,
}

/// Counts sign changes of the gradient between consecutive records. An
/// exactly zero gradient is a landing on the minimizer and ends the scan.
pub fn crossings<T: Scalar>(trace: &Trace<T>) -> Crossings {
    let mut indices = Vec::new();
    for w in trace.records.windows(2) {
        if w[0].grad.is_zero() || w[1].grad.is_zero() {
            break;
        }
        if w[0].grad * w[1].grad < T::zero() {
            indices.push(w[0].k);
        }
    }
    Crossings {
        count: indices.len(),
        indices,
    }
}

/// Decides between asymptotic convergence, bounded oscillation and
/// divergence from a finished trace.
///
/// A trace that ran out of budget is a bounded oscillation when the sup of
/// `|t_k - t*|` over the trailing window differs from the preceding window
/// by less than `stationarity` (relative) and the gradient changes sign
/// inside the trailing window. Both windows must lie after a transient of
/// `max(min_transient, transient_fraction * len)` records.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classifier {
    pub window: usize,
    pub stationarity: f64,
    pub min_transient: usize,
    pub transient_fraction: f64,
}

impl Default for Classifier {
    fn default() -> Self {
        Self {
            window: DEFAULT_WINDOW,
            stationarity: 0.1,
            min_transient: 500,
            transient_fraction: 0.1,
        }
    }
}

impl Classifier {
    pub fn with_window(window: usize) -> Self {
        Self {
            window,
            ..Self::default()
        }
    }

    pub fn classify<T: Scalar>(&self, trace: &Trace<T>, t_star: T) -> ConvergenceReport<T> {
        let final_error = (trace.last().t - t_star).abs();
        let crossing_count = crossings(trace).count;
        let report = |classification, oscillation_amplitude| ConvergenceReport {
            classification,
            final_error,
            oscillation_amplitude,
            crossing_count,
            theoretical_bound: None,
        };
        match trace.termination {
            Termination::ToleranceMet | Termination::ZeroStepFixedPoint => {
                return report(Classification::Asymptotic, None)
            }
            Termination::DivergenceDetected => return report(Classification::Diverged, None),
            Termination::MaxIterReached => {}
        }
        match self.trailing_amplitude(trace, t_star) {
            Some(amp) => report(Classification::BoundedOscillation, Some(amp)),
            None => report(Classification::Inconclusive, None),
        }
    }

    fn trailing_amplitude<T: Scalar>(&self, trace: &Trace<T>, t_star: T) -> Option<T> {
        let len = trace.len();
        let w = self.window.max(1);
        let transient = self
            .min_transient
            .max((self.transient_fraction * len as f64) as usize);
        if len < transient + 2 * w {
            return None;
        }
        let sup = |recs: &[crate::optimizers::IterationRecord<T>]| {
            recs.iter()
                .fold(T::zero(), |m, r| m.max((r.t - t_star).abs()))
        };
        let last = &trace.records[len - w..];
        let before = &trace.records[len - 2 * w..len - w];
        let (a_last, a_before) = (sup(last), sup(before));
        if !(a_last > T::zero()) || !a_last.is_finite() {
            return None;
        }
        let spread = (a_last - a_before).abs() / a_last.max(a_before);
        let swings = last
            .windows(2)
            .any(|p| p[0].grad * p[1].grad < T::zero());
        (spread < T::lit(self.stationarity) && swings).then_some(a_last)
    }
}

/// [`Classifier::classify`] with default thresholds and the given window.
pub fn classify<T: Scalar>(trace: &Trace<T>, t_star: T, window: usize) -> ConvergenceReport<T> {
    Classifier::with_window(window).classify(trace, t_star)
}
