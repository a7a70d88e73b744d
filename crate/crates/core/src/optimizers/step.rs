use serde::{Deserialize, Serialize};

use crate::error::{FogmError, Result};
use crate::scalar::Scalar;

/// Which order/regularizer pair a switching run is using at a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    PreSwitch,
    PostSwitch,
    NotApplicable,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::PreSwitch => "pre_switch",
            Phase::PostSwitch => "post_switch",
            Phase::NotApplicable => "na",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pre_switch" => Some(Phase::PreSwitch),
            "post_switch" => Some(Phase::PostSwitch),
            "na" => Some(Phase::NotApplicable),
            _ => None,
        }
    }
}

/// Outcome of evaluating `(|Δ| + δ)^(1 - α)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Multiplier<T> {
    Finite(T),
    /// Zero base with `alpha > 1`.
    Singular,
}

/// `(|increment| + delta)^(1 - alpha)` with `0^0 = 1`; zero base gives 0
/// for `alpha < 1` and is singular for `alpha > 1`.
#[inline]
pub(crate) fn multiplier<T: Scalar>(increment: T, alpha: T, delta: T) -> Multiplier<T> {
    let base = increment.abs() + delta;
    let exponent = T::one() - alpha;
    if base.is_zero() {
        return if exponent > T::zero() {
            Multiplier::Finite(T::zero())
        } else if exponent.is_zero() {
            Multiplier::Finite(T::one())
        } else {
            Multiplier::Singular
        };
    }
    Multiplier::Finite(base.powf(exponent))
}

fn finite<T: Scalar>(x: T, what: &str) -> Result<T> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(FogmError::NonFiniteValue(format!("{what} = {x}")))
    }
}

/// One gradient-method step, `t - rho * grad`.
pub fn gm_step<T: Scalar>(t: T, rho: T, grad: T) -> Result<T> {
    finite(t, "t")?;
    finite(grad, "grad")?;
    if !(rho > T::zero() && rho.is_finite()) {
        return Err(FogmError::DomainError(format!("rho = {rho} must be positive")));
    }
    finite(t - rho * grad, "gm step")
}

/// One (modified) FOGM step,
/// `t_curr - rho * grad_curr * (|t_curr - t_prev| + delta)^(1 - alpha)`.
///
/// With `alpha = 1` and `delta = 0` this is bit-identical to [`gm_step`].
pub fn fogm_step<T: Scalar>(
    t_prev: T,
    t_curr: T,
    rho: T,
    alpha: T,
    delta: T,
    grad_curr: T,
) -> Result<T> {
    finite(t_prev, "t_prev")?;
    finite(t_curr, "t_curr")?;
    finite(grad_curr, "grad")?;
    if !(rho > T::zero() && rho.is_finite()) {
        return Err(FogmError::DomainError(format!("rho = {rho} must be positive")));
    }
    if !(alpha > T::zero() && alpha < T::lit(2.0)) {
        return Err(FogmError::DomainError(format!("alpha = {alpha} outside (0, 2)")));
    }
    if !(delta >= T::zero()) {
        return Err(FogmError::DomainError(format!("delta = {delta} must be nonnegative")));
    }
    match multiplier(t_curr - t_prev, alpha, delta) {
        Multiplier::Finite(m) => finite(t_curr - rho * m * grad_curr, "fogm step"),
        Multiplier::Singular => Err(FogmError::SingularStep { k: 0 }),
    }
}

/// Inputs to the switching rule at the step that produces `t_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SwitchState<T> {
    pub k: usize,
    /// `t_k - t_{k-1}`.
    pub delta_k: T,
    /// `f'(t_2)`.
    pub grad_t2: T,
    /// `f'(t_k)`.
    pub grad_curr: T,
    pub latched: bool,
}

/// The one-way switch: once `|Δ_k| < 1` or `f'(t_2) f'(t_k) < 0` has held,
/// the run stays in the post-switch phase. Returns the phase for this step
/// and the updated latch.
pub fn switching_policy<T: Scalar>(state: SwitchState<T>) -> (Phase, bool) {
    let latched = state.latched
        || state.delta_k.abs() < T::one()
        || state.grad_t2 * state.grad_curr < T::zero();
    let phase = if latched { Phase::PostSwitch } else { Phase::PreSwitch };
    (phase, latched)
}
