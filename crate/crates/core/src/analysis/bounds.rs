use crate::error::{FogmError, Result};
use crate::scalar::Scalar;

fn positive<T: Scalar>(x: T, name: &str) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(FogmError::DomainError(format!("{name} = {x} must be positive")))
    }
}

/// Radius `(rho * mu)^(1 / (alpha - p))` of the region FOGM settles into for
/// a `p`-order Lipschitz-gradient objective. The radius is meaningful for
/// `p < alpha < 1 + p`; `alpha <= p` is rejected since the iterates may
/// then converge to the minimizer itself.
pub fn theoretical_bound<T: Scalar>(rho: T, mu: T, alpha: T, p: T) -> Result<T> {
    positive(rho, "rho")?;
    positive(mu, "mu")?;
    positive(p, "p")?;
    if !(alpha > p) {
        return Err(FogmError::DomainError(format!(
            "alpha = {alpha} must exceed the Lipschitz order p = {p}"
        )));
    }
    Ok((rho * mu).powf(T::one() / (alpha - p)))
}

/// Regularizer `delta = (rho * mu)^(1 / (alpha - 1))` for the modified FOGM;
/// it sits exactly on the boundary `rho * mu * delta^(1 - alpha) = 1`.
pub fn recommend_delta<T: Scalar>(rho: T, mu: T, alpha: T) -> Result<T> {
    positive(rho, "rho")?;
    positive(mu, "mu")?;
    if !(alpha > T::one() && alpha < T::lit(2.0)) {
        return Err(FogmError::DomainError(format!(
            "recommended delta needs 1 < alpha < 2, got {alpha}"
        )));
    }
    Ok((rho * mu).powf(T::one() / (alpha - T::one())))
}
