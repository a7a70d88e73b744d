//! String ids for corpus objectives: `name[:key=value,...]`, e.g.
//! `quadratic:c=3` or `pow43:c=100`. Polynomials use `poly:a0=..,a1=..`
//! with `aK` the coefficient of `t^K`.

use std::fmt;
use std::str::FromStr;

use crate::error::{FogmError, Result};
use crate::scalar::Scalar;

use super::{power_four_thirds, quadratic, Polynomial, ScalarObjective};

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectiveSpec {
    pub name: String,
    pub params: Vec<(String, f64)>,
}

impl ObjectiveSpec {
    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    fn err(&self, reason: impl Into<String>) -> FogmError {
        FogmError::ObjectiveId {
            id: self.to_string(),
            reason: reason.into(),
        }
    }

    fn only_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(self.err(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn build<T: Scalar>(&self) -> Result<ScalarObjective<T>> {
        let lit = |v: f64| {
            T::from_f64(v)
                .filter(|x| x.is_finite())
                .ok_or_else(|| self.err(format!("value {v} not representable")))
        };
        match self.name.as_str() {
            "quadratic" => {
                self.only_keys(&["c"])?;
                Ok(quadratic(lit(self.param("c").unwrap_or(0.0))?))
            }
            "pow43" => {
                self.only_keys(&["c"])?;
                Ok(power_four_thirds(lit(self.param("c").unwrap_or(0.0))?))
            }
            "poly" => {
                let mut coeffs = Vec::new();
                for (k, v) in &self.params {
                    let power: usize = k
                        .strip_prefix('a')
                        .and_then(|p| p.parse().ok())
                        .ok_or_else(|| self.err(format!("expected aK, got `{k}`")))?;
                    if power >= 64 {
                        return Err(self.err("degree above 63"));
                    }
                    if coeffs.len() <= power {
                        coeffs.resize(power + 1, T::zero());
                    }
                    coeffs[power] = lit(*v)?;
                }
                Ok(Polynomial::new(coeffs).to_objective())
            }
            other => Err(self.err(format!("unknown objective `{other}`"))),
        }
    }
}

impl FromStr for ObjectiveSpec {
    type Err = FogmError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| FogmError::ObjectiveId {
            id: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (s.trim(), None),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(bad("missing or malformed name"));
        }
        let mut params = Vec::new();
        if let Some(rest) = rest {
            for pair in rest.split(',') {
                let (k, v) = pair.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                let (k, v) = (k.trim(), v.trim());
                if k.is_empty() {
                    return Err(bad("empty key"));
                }
                let v: f64 = v.parse().map_err(|_| bad("value is not a decimal real"))?;
                if !v.is_finite() {
                    return Err(bad("value must be finite"));
                }
                if params.iter().any(|(p, _): &(String, f64)| p == k) {
                    return Err(bad("duplicate key"));
                }
                params.push((k.to_string(), v));
            }
        }
        Ok(Self {
            name: name.to_string(),
            params,
        })
    }
}

impl fmt::Display for ObjectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

/// Parses a corpus id and builds the objective.
pub fn parse_objective<T: Scalar>(id: &str) -> Result<ScalarObjective<T>> {
    id.parse::<ObjectiveSpec>()?.build()
}
