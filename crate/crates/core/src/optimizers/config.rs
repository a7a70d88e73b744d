use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FogmError, Result};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_ITER: usize = 50_000;
pub const DEFAULT_TOL_ABS: f64 = 1e-12;
pub const DEFAULT_STATIONARY_WINDOW: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `t_{k+1} = t_k - rho f'(t_k)`.
    Gm,
    /// `t_{k+1} = t_k - rho f'(t_k) |t_k - t_{k-1}|^(1 - alpha)`.
    Fogm,
    /// As `Fogm` with the increment offset by `delta > 0`.
    ModifiedFogm,
    /// `alpha < 1`, `delta = 0` until the first sub-unit increment or
    /// gradient sign change, then `alpha_post > 1` with the recommended delta.
    SwitchingFogm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Gm => "gm",
            Method::Fogm => "fogm",
            Method::ModifiedFogm => "modified_fogm",
            Method::SwitchingFogm => "switching_fogm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = FogmError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "gm" => Ok(Method::Gm),
            "fogm" => Ok(Method::Fogm),
            "modified" | "modified_fogm" | "mfogm" => Ok(Method::ModifiedFogm),
            "switching" | "switching_fogm" | "sfogm" => Ok(Method::SwitchingFogm),
            other => Err(FogmError::InvalidConfig(format!("unknown method `{other}`"))),
        }
    }
}

/// Parameters of a single optimizer run.
///
/// For [`Method::SwitchingFogm`] `alpha` is the pre-switch order and
/// `alpha_post` the post-switch order. `t2` defaults to one GM step from
/// `t1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct OptimizerConfig<T> {
    pub method: Method,
    pub alpha: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_post: Option<T>,
    pub rho: T,
    #[serde(default)]
    pub delta: T,
    pub t1: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<T>,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default = "default_tol")]
    pub tol_abs: T,
    #[serde(default = "default_window")]
    pub stationary_window: usize,
}

fn default_max_iter() -> usize {
    DEFAULT_MAX_ITER
}

fn default_tol<T: Scalar>() -> T {
    T::lit(DEFAULT_TOL_ABS)
}

fn default_window() -> usize {
    DEFAULT_STATIONARY_WINDOW
}

impl<T: Scalar> OptimizerConfig<T> {
    fn base(method: Method, alpha: T, rho: T, t1: T) -> Self {
        Self {
            method,
            alpha,
            alpha_post: None,
            rho,
            delta: T::zero(),
            t1,
            t2: None,
            max_iter: DEFAULT_MAX_ITER,
            tol_abs: T::lit(DEFAULT_TOL_ABS),
            stationary_window: DEFAULT_STATIONARY_WINDOW,
        }
    }

    pub fn gm(rho: T, t1: T) -> Self {
        Self::base(Method::Gm, T::one(), rho, t1)
    }

    pub fn fogm(alpha: T, rho: T, t1: T) -> Self {
        Self::base(Method::Fogm, alpha, rho, t1)
    }

    pub fn modified(alpha: T, rho: T, delta: T, t1: T) -> Self {
        Self {
            delta,
            ..Self::base(Method::ModifiedFogm, alpha, rho, t1)
        }
    }

    pub fn switching(alpha_pre: T, alpha_post: T, rho: T, t1: T) -> Self {
        Self {
            alpha_post: Some(alpha_post),
            ..Self::base(Method::SwitchingFogm, alpha_pre, rho, t1)
        }
    }

    pub fn with_t2(mut self, t2: T) -> Self {
        self.t2 = Some(t2);
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_tol(mut self, tol_abs: T) -> Self {
        self.tol_abs = tol_abs;
        self
    }

    pub fn with_window(mut self, stationary_window: usize) -> Self {
        self.stationary_window = stationary_window;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(FogmError::InvalidConfig(msg));
        let two = T::lit(2.0);
        if !(self.rho > T::zero() && self.rho.is_finite()) {
            return bad(format!("rho = {} must be positive and finite", self.rho));
        }
        if !self.t1.is_finite() || self.t2.is_some_and(|t| !t.is_finite()) {
            return bad("initial points must be finite".into());
        }
        if self.max_iter == 0 {
            return bad("max_iter must be positive".into());
        }
        if !(self.tol_abs > T::zero()) {
            return bad(format!("tol_abs = {} must be positive", self.tol_abs));
        }
        if self.stationary_window == 0 {
            return bad("stationary_window must be positive".into());
        }
        if !(self.delta >= T::zero() && self.delta.is_finite()) {
            return bad(format!("delta = {} must be nonnegative", self.delta));
        }
        match self.method {
            Method::Gm => {}
            Method::Fogm | Method::ModifiedFogm => {
                if !(self.alpha > T::zero() && self.alpha < two) {
                    return bad(format!("alpha = {} outside (0, 2)", self.alpha));
                }
                if self.method == Method::Fogm && !self.delta.is_zero() {
                    return bad("plain FOGM uses delta = 0; use modified_fogm".into());
                }
            }
            Method::SwitchingFogm => {
                let post = match self.alpha_post {
                    Some(a) => a,
                    None => return bad("switching FOGM needs alpha_post".into()),
                };
                if !(self.alpha > T::zero() && self.alpha < T::one()) {
                    return bad(format!("pre-switch alpha = {} outside (0, 1)", self.alpha));
                }
                if !(post > T::one() && post < two) {
                    return bad(format!("post-switch alpha = {post} outside (1, 2)"));
                }
            }
        }
        Ok(())
    }
}
