use serde::{Deserialize, Serialize};

use crate::error::{FogmError, Result};
use crate::objective::ScalarObjective;
use crate::optimizers::{run, Method, OptimizerConfig};
use crate::scalar::Scalar;

use super::classify::{Classification, Classifier};

/// Result of the order bisection, with every probe that was run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderEstimate<T> {
    pub alpha_star: T,
    pub lo: T,
    pub hi: T,
    pub probes: Vec<(T, Classification)>,
}

/// Bisects on the gradient order of plain FOGM (`delta = 0`) for the
/// smallest order at which the run settles into a bounded oscillation
/// around the minimizer.
///
/// Above the strong-convexity order `p` the iterates cannot reach the
/// minimizer and stay in a bounded region; below it they either converge
/// or, from far starts, overshoot without bound. Every probe is therefore
/// split into "bounded oscillation" and everything else, and the
/// threshold estimates `p`. `cfg_template` supplies step size, initial
/// points and budget; its method, order and regularizer are overridden.
pub fn estimate_convexity_order<T: Scalar>(
    obj: &ScalarObjective<T>,
    cfg_template: &OptimizerConfig<T>,
    alpha_lo: T,
    alpha_hi: T,
    tol_alpha: T,
) -> Result<OrderEstimate<T>> {
    if !(alpha_lo > T::zero() && alpha_lo < alpha_hi && alpha_hi < T::one()) {
        return Err(FogmError::DomainError(format!(
            "order bracket needs 0 < lo < hi < 1, got [{alpha_lo}, {alpha_hi}]"
        )));
    }
    if !(tol_alpha > T::zero()) {
        return Err(FogmError::DomainError(format!("tol_alpha = {tol_alpha} must be positive")));
    }
    let t_star = obj
        .extremum()
        .ok_or(FogmError::MissingMetadata("extremum"))?;
    let classifier = Classifier::default();
    let mut probes = Vec::new();
    let mut probe = |alpha: T| -> Result<bool> {
        let cfg = OptimizerConfig {
            method: Method::Fogm,
            alpha,
            alpha_post: None,
            delta: T::zero(),
            ..*cfg_template
        };
        let class = classifier.classify(&run(obj, &cfg)?, t_star).classification;
        probes.push((alpha, class));
        Ok(class == Classification::BoundedOscillation)
    };

    let fail = |reason: String| FogmError::BracketingFailed {
        lo: alpha_lo.to_f64_lossy(),
        hi: alpha_hi.to_f64_lossy(),
        reason,
    };
    if probe(alpha_lo)? {
        return Err(fail("lower order already oscillates".into()));
    }
    if !probe(alpha_hi)? {
        return Err(fail("upper order does not settle into a bounded oscillation".into()));
    }
    let (mut lo, mut hi) = (alpha_lo, alpha_hi);
    let half = T::lit(0.5);
    while hi - lo > tol_alpha {
        let mid = (lo + hi) * half;
        if probe(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(OrderEstimate {
        alpha_star: (lo + hi) * half,
        lo,
        hi,
        probes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRegion<T> {
    pub center: T,
    pub radius_lo: T,
    pub radius_hi: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LipschitzEstimate<T> {
    pub p_hat: T,
    pub mu_hat: T,
}

/// Fits `log|f'(x) - f'(y)| = log(mu) + p log|x - y|` by least squares over
/// pairs `(center, center ± r)` with `r` log-spaced on `[radius_lo, radius_hi]`,
/// alternating sides.
pub fn estimate_lipschitz_order<T: Scalar>(
    obj: &ScalarObjective<T>,
    region: SampleRegion<T>,
    samples: usize,
) -> Result<LipschitzEstimate<T>> {
    let SampleRegion {
        center,
        radius_lo,
        radius_hi,
    } = region;
    if !(radius_lo > T::zero() && radius_hi > radius_lo) {
        return Err(FogmError::DomainError(format!(
            "sample radii need 0 < lo < hi, got [{radius_lo}, {radius_hi}]"
        )));
    }
    if samples < 10 {
        return Err(FogmError::DomainError(format!("need at least 10 samples, got {samples}")));
    }
    let g_center = obj.gradient(center);
    let ratio = (radius_hi / radius_lo).ln();
    let last = T::from_usize_lossy(samples - 1);
    let mut points = Vec::with_capacity(samples);
    for i in 0..samples {
        let r = radius_lo * (ratio * T::from_usize_lossy(i) / last).exp();
        let x = if i % 2 == 0 { center + r } else { center - r };
        let dg = (obj.gradient(x) - g_center).abs();
        let dx = (x - center).abs();
        if dg > T::zero() && dg.is_finite() && dx > T::zero() {
            points.push((dx.ln(), dg.ln()));
        }
    }
    if points.len() < 2 {
        return Err(FogmError::DegenerateSample("gradient differences vanish"));
    }
    let n = T::from_usize_lossy(points.len());
    let (sx, sy) = points
        .iter()
        .fold((T::zero(), T::zero()), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let (sxx, sxy) = points.iter().fold((T::zero(), T::zero()), |(a, b), &(x, y)| {
        (a + (x - mx) * (x - mx), b + (x - mx) * (y - my))
    });
    if !(sxx > T::zero()) {
        return Err(FogmError::DegenerateSample("sampled distances coincide"));
    }
    let p_hat = sxy / sxx;
    Ok(LipschitzEstimate {
        p_hat,
        mu_hat: (my - p_hat * mx).exp(),
    })
}
