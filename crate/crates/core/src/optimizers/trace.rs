use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::step::Phase;

/// State at iterate `t_k` and the step multiplier applied to leave it.
///
/// `effective_step` is NaN where no update rule produced the successor:
/// the first record when `t2` was supplied explicitly, and the final
/// record of a diverged run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord<T> {
    pub k: usize,
    pub t: T,
    pub f_value: T,
    pub grad: T,
    /// `t_k - t_{k-1}`; zero for `k = 1`.
    pub delta_k: T,
    pub effective_step: T,
    pub phase: Phase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    ToleranceMet,
    MaxIterReached,
    DivergenceDetected,
    ZeroStepFixedPoint,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::ToleranceMet => "tolerance_met",
            Termination::MaxIterReached => "max_iter_reached",
            Termination::DivergenceDetected => "divergence_detected",
            Termination::ZeroStepFixedPoint => "zero_step_fixed_point",
        }
    }
}

/// Full record of a scalar run. Records are nonempty with `k = 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trace<T> {
    pub records: Vec<IterationRecord<T>>,
    pub termination: Termination,
}

impl<T: Scalar> Trace<T> {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> &IterationRecord<T> {
        self.records.last().expect("trace is nonempty")
    }

    pub fn iterates(&self) -> impl Iterator<Item = T> + '_ {
        self.records.iter().map(|r| r.t)
    }

    /// First record index `k` whose iterate satisfies `|t_k - target| <= tol`.
    pub fn first_within(&self, target: T, tol: T) -> Option<usize> {
        self.records
            .iter()
            .find(|r| (r.t - target).abs() <= tol)
            .map(|r| r.k)
    }

    /// Checks `t_{k+1} == t_k - effective_step * grad_k` bit-for-bit on every
    /// consecutive pair whose step is defined. Returns the first offending `k`.
    pub fn reconstruction_mismatch(&self) -> Option<usize> {
        self.records.windows(2).find_map(|w| {
            let (a, b) = (&w[0], &w[1]);
            if a.effective_step.is_nan() {
                return None;
            }
            let rebuilt = a.t - a.effective_step * a.grad;
            (!same_bits(rebuilt, b.t)).then_some(a.k)
        })
    }
}

/// Equality including the sign of zero.
pub fn same_bits<T: Scalar>(a: T, b: T) -> bool {
    (a == b && a.is_sign_negative() == b.is_sign_negative()) || (a.is_nan() && b.is_nan())
}

/// Record of a vector run; per-component fields have the objective's dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorRecord<T> {
    pub k: usize,
    pub t: Vec<T>,
    pub f_value: T,
    pub grad: Vec<T>,
    pub delta_k: Vec<T>,
    pub effective_step: Vec<T>,
    pub phase: Phase,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorTrace<T> {
    pub records: Vec<VectorRecord<T>>,
    pub termination: Termination,
}

impl<T: Scalar> VectorTrace<T> {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> &VectorRecord<T> {
        self.records.last().expect("trace is nonempty")
    }

    pub fn dimension(&self) -> usize {
        self.records.first().map_or(0, |r| r.t.len())
    }
}
