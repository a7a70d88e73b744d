//! Objective functions: the scalar/vector abstractions, the built-in test
//! corpus and a finite-difference gradient check.

mod corpus;
mod id;
mod polynomial;
mod vector;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{FogmError, Result};
use crate::scalar::Scalar;

pub use corpus::{power_four_thirds, quadratic};
pub use id::{parse_objective, ObjectiveSpec};
pub use polynomial::Polynomial;
pub use vector::VectorObjective;

pub(crate) type ScalarFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// A `p`-order Lipschitz bound on the gradient that only holds away from
/// the minimizer, i.e. for `|t - t*| > outside_radius`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalLipschitz<T> {
    pub mu: T,
    pub order: T,
    pub outside_radius: T,
}

/// Optional analytic facts about an objective.
///
/// Analysis routines that need one of these constants fail with
/// [`FogmError::MissingMetadata`] instead of guessing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata<T> {
    /// The unique minimizer `t*`.
    pub extremum: Option<T>,
    /// Constant `mu` in `|f'(x) - f'(y)| <= mu |x - y|^p`, global.
    pub lipschitz_mu: Option<T>,
    /// Constant `lambda` in `|f'(x) - f'(y)| >= lambda |x - y|^p`.
    pub strong_lambda: Option<T>,
    /// Exponent `p` of the Lipschitz-gradient bound.
    pub lipschitz_order: Option<T>,
    /// Exponent `p` of the strong-convexity bound.
    pub convexity_order: Option<T>,
    pub local_lipschitz: Option<LocalLipschitz<T>>,
}

/// A pure scalar function together with its first derivative.
///
/// Cloning is cheap; the closures are shared.
#[derive(Clone)]
pub struct ScalarObjective<T> {
    name: String,
    value: ScalarFn<T>,
    gradient: ScalarFn<T>,
    meta: Metadata<T>,
}

impl<T: Scalar> ScalarObjective<T> {
    pub fn new<F, G>(name: impl Into<String>, value: F, gradient: G) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
        G: Fn(T) -> T + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            value: Arc::new(value),
            gradient: Arc::new(gradient),
            meta: Metadata::default(),
        }
    }

    pub fn with_metadata(mut self, meta: Metadata<T>) -> Self {
        self.meta = meta;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn evaluate(&self, t: T) -> T {
        (self.value)(t)
    }

    #[inline]
    pub fn gradient(&self, t: T) -> T {
        (self.gradient)(t)
    }

    pub fn metadata(&self) -> &Metadata<T> {
        &self.meta
    }

    pub fn extremum(&self) -> Option<T> {
        self.meta.extremum
    }

    /// The global Lipschitz constant, or `MissingMetadata`.
    pub fn require_mu(&self) -> Result<T> {
        self.meta
            .lipschitz_mu
            .ok_or(FogmError::MissingMetadata("lipschitz_mu"))
    }
}

impl<T: Scalar> fmt::Debug for ScalarObjective<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarObjective")
            .field("name", &self.name)
            .field("meta", &self.meta)
            .finish()
    }
}

/// Worst agreement between analytic and finite-difference gradients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradientCheck<T> {
    pub max_rel_error: T,
    pub worst_point: T,
}

/// Compares `obj.gradient` with a central difference of `obj.evaluate` at
/// every point, using step `h = 1e-6 * max(1, |t|)`.
///
/// The error at a point is `|g - g_fd| / max(1, |g|, |g_fd|)`, so it is
/// relative for gradients of magnitude above one and absolute below.
pub fn check_gradient<T: Scalar>(
    obj: &ScalarObjective<T>,
    points: &[T],
) -> Result<GradientCheck<T>> {
    if points.is_empty() {
        return Err(FogmError::NonEmptyRequired("check_gradient points"));
    }
    let step = T::lit(1e-6);
    let two = T::lit(2.0);
    let mut worst = GradientCheck {
        max_rel_error: T::zero(),
        worst_point: points[0],
    };
    for &t in points {
        if !t.is_finite() {
            return Err(FogmError::NonFiniteValue(format!("test point {t}")));
        }
        let h = step * T::one().max(t.abs());
        let (up, down) = (obj.evaluate(t + h), obj.evaluate(t - h));
        let analytic = obj.gradient(t);
        if !(up.is_finite() && down.is_finite() && analytic.is_finite()) {
            return Err(FogmError::NonFiniteValue(format!(
                "{} evaluated near {t}",
                obj.name()
            )));
        }
        let numeric = (up - down) / (two * h);
        let scale = T::one().max(analytic.abs()).max(numeric.abs());
        let err = (analytic - numeric).abs() / scale;
        if err > worst.max_rel_error {
            worst = GradientCheck {
                max_rel_error: err,
                worst_point: t,
            };
        }
    }
    Ok(worst)
}
