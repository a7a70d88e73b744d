//! Truncated Caputo and Riemann-Liouville series for polynomials.
//!
//! For `0 < alpha < 1` and `t > t0` the Caputo derivative expands as
//!
//! ```text
//! sum_{i>=0} f^(i+1)(t0) / Gamma(i + 2 - alpha) * (t - t0)^(i + 1 - alpha)
//! ```
//!
//! and the Riemann-Liouville one as
//!
//! ```text
//! sum_{i>=0} f^(i)(t0) / Gamma(i + 1 - alpha) * (t - t0)^(i - alpha)
//! ```
//!
//! Keeping only the `i = 0` Caputo term, with the increment `t - t0`
//! playing the role of the previous step, gives the fractional-order
//! update direction used by the optimizers.

mod gamma;

use serde::{Deserialize, Serialize};

pub use gamma::gamma;
use gamma::gamma_positive;

use crate::error::{FogmError, Result};
use crate::objective::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Definition {
    Caputo,
    RiemannLiouville,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FracSeriesSpec<T> {
    pub definition: Definition,
    pub alpha: T,
    pub base_point: T,
    pub eval_point: T,
    /// Number of series terms kept.
    pub truncation: usize,
}

impl<T: Scalar> FracSeriesSpec<T> {
    pub fn caputo(alpha: T, base_point: T, eval_point: T, truncation: usize) -> Self {
        Self {
            definition: Definition::Caputo,
            alpha,
            base_point,
            eval_point,
            truncation,
        }
    }

    pub fn riemann_liouville(alpha: T, base_point: T, eval_point: T, truncation: usize) -> Self {
        Self {
            definition: Definition::RiemannLiouville,
            ..Self::caputo(alpha, base_point, eval_point, truncation)
        }
    }

    fn check(&self, expected: Definition) -> Result<()> {
        if self.definition != expected {
            return Err(FogmError::DomainError(format!(
                "series evaluator for {expected:?} given a {:?} spec",
                self.definition
            )));
        }
        if !(self.alpha > T::zero() && self.alpha < T::one()) {
            return Err(FogmError::DomainError(format!(
                "series order alpha = {} must lie in (0, 1)",
                self.alpha
            )));
        }
        if !(self.eval_point > self.base_point) {
            return Err(FogmError::DomainError(format!(
                "eval point {} must exceed base point {}",
                self.eval_point, self.base_point
            )));
        }
        if self.truncation == 0 {
            return Err(FogmError::DomainError("truncation must be at least 1".into()));
        }
        Ok(())
    }
}

/// One row of a series-versus-closed-form comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow<T> {
    pub i: usize,
    pub term: T,
    pub partial_sum: T,
    pub closed_form: T,
    pub rel_err: T,
}

fn caputo_terms<T: Scalar>(p: &Polynomial<T>, spec: &FracSeriesSpec<T>) -> Vec<T> {
    let h = spec.eval_point - spec.base_point;
    // f^(i+1) vanishes once i + 1 exceeds the degree.
    let nonzero = p.degree().min(spec.truncation);
    (0..nonzero)
        .map(|i| {
            let order = T::from_usize_lossy(i + 1);
            p.derivative_at(spec.base_point, i + 1) / gamma_positive(order + T::one() - spec.alpha)
                * h.powf(order - spec.alpha)
        })
        .collect()
}

fn rl_terms<T: Scalar>(p: &Polynomial<T>, spec: &FracSeriesSpec<T>) -> Vec<T> {
    let h = spec.eval_point - spec.base_point;
    let nonzero = if p.is_zero() { 0 } else { (p.degree() + 1).min(spec.truncation) };
    (0..nonzero)
        .map(|i| {
            let order = T::from_usize_lossy(i);
            p.derivative_at(spec.base_point, i) / gamma_positive(order + T::one() - spec.alpha)
                * h.powf(order - spec.alpha)
        })
        .collect()
}

/// Caputo series truncated to `spec.truncation` terms; exact once the
/// truncation reaches the degree of `p`.
pub fn caputo_series<T: Scalar>(p: &Polynomial<T>, spec: &FracSeriesSpec<T>) -> Result<T> {
    spec.check(Definition::Caputo)?;
    Ok(caputo_terms(p, spec).into_iter().fold(T::zero(), |a, b| a + b))
}

/// Riemann-Liouville series truncated to `spec.truncation` terms; exact once
/// the truncation exceeds the degree of `p`.
pub fn rl_series<T: Scalar>(p: &Polynomial<T>, spec: &FracSeriesSpec<T>) -> Result<T> {
    spec.check(Definition::RiemannLiouville)?;
    Ok(rl_terms(p, spec).into_iter().fold(T::zero(), |a, b| a + b))
}

/// Term-by-term partial sums of either series against a reference value.
pub fn series_table<T: Scalar>(
    p: &Polynomial<T>,
    spec: &FracSeriesSpec<T>,
    closed_form: T,
) -> Result<Vec<SeriesRow<T>>> {
    spec.check(spec.definition)?;
    let mut terms = match spec.definition {
        Definition::Caputo => caputo_terms(p, spec),
        Definition::RiemannLiouville => rl_terms(p, spec),
    };
    terms.resize(spec.truncation, T::zero());
    let mut partial = T::zero();
    Ok(terms
        .into_iter()
        .enumerate()
        .map(|(i, term)| {
            partial = partial + term;
            let rel_err = if closed_form.is_zero() {
                (partial - closed_form).abs()
            } else {
                ((partial - closed_form) / closed_form).abs()
            };
            SeriesRow {
                i,
                term,
                partial_sum: partial,
                closed_form,
                rel_err,
            }
        })
        .collect())
}

/// Closed-form Caputo derivative of `(t - t0)^k` for `0 < alpha < 1`:
/// `k! / Gamma(k + 1 - alpha) * (t - t0)^(k - alpha)`, zero for `k = 0`.
pub fn caputo_power<T: Scalar>(k: usize, alpha: T, t0: T, t: T) -> Result<T> {
    FracSeriesSpec::caputo(alpha, t0, t, 1).check(Definition::Caputo)?;
    if k == 0 {
        return Ok(T::zero());
    }
    let kk = T::from_usize_lossy(k);
    let factorial = gamma_positive(kk + T::one());
    Ok(factorial / gamma_positive(kk + T::one() - alpha) * (t - t0).powf(kk - alpha))
}

/// The `i = 0` Caputo term with its `1 / Gamma(2 - alpha)` factor folded
/// into the step size: `grad_at_base * delta^(1 - alpha)`.
pub fn fogm_direction_term<T: Scalar>(grad_at_base: T, delta: T, alpha: T) -> Result<T> {
    if !(delta > T::zero()) {
        return Err(FogmError::DomainError(format!("increment {delta} must be positive")));
    }
    if !(alpha > T::zero() && alpha < T::lit(2.0)) {
        return Err(FogmError::DomainError(format!("alpha = {alpha} outside (0, 2)")));
    }
    Ok(grad_at_base * delta.powf(T::one() - alpha))
}
