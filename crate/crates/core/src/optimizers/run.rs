use crate::analysis::recommend_delta;
use crate::error::{FogmError, Result};
use crate::objective::{ScalarObjective, VectorObjective};
use crate::scalar::Scalar;

use super::config::{Method, OptimizerConfig};
use super::step::{multiplier, switching_policy, Multiplier, Phase, SwitchState};
use super::trace::{IterationRecord, Termination, Trace, VectorRecord, VectorTrace};

/// Magnitude beyond which an iterate, gradient or function value counts as
/// divergent: `1e150` for `f64`, scaled down for narrower types.
pub fn divergence_threshold<T: Scalar>() -> T {
    T::lit(1e150).min(T::max_value() * T::lit(1e-8))
}

fn diverged<T: Scalar>(values: &[T], limit: T) -> bool {
    values.iter().any(|v| !v.is_finite() || v.abs() > limit)
}

/// Order and regularizer used at one step, and the phase they belong to.
#[derive(Clone, Copy)]
struct StepRule<T> {
    alpha: T,
    delta: T,
    phase: Phase,
}

/// Resolves the per-step rule for every method. GM is FOGM with `alpha = 1`,
/// `delta = 0`, whose multiplier is exactly one.
struct Scheduler<T> {
    method: Method,
    alpha: T,
    delta: T,
    post: Option<(T, T)>,
    latched: bool,
}

impl<T: Scalar> Scheduler<T> {
    fn new(cfg: &OptimizerConfig<T>, mu: Option<T>) -> Result<Self> {
        let post = match cfg.method {
            Method::SwitchingFogm => {
                let mu = mu.ok_or(FogmError::MissingMetadata("lipschitz_mu"))?;
                let alpha_post = cfg.alpha_post.expect("validated");
                Some((alpha_post, recommend_delta(cfg.rho, mu, alpha_post)?))
            }
            _ => None,
        };
        let (alpha, delta) = match cfg.method {
            Method::Gm => (T::one(), T::zero()),
            Method::Fogm => (cfg.alpha, T::zero()),
            Method::ModifiedFogm => (cfg.alpha, cfg.delta),
            Method::SwitchingFogm => (cfg.alpha, T::zero()),
        };
        Ok(Self {
            method: cfg.method,
            alpha,
            delta,
            post,
            latched: false,
        })
    }

    fn seed_phase(&self) -> Phase {
        match self.method {
            Method::SwitchingFogm => Phase::PreSwitch,
            _ => Phase::NotApplicable,
        }
    }

    /// `increment_norm` is `|Δ_k|` (max-norm for vectors); the switch fires
    /// on a crossing when `grad_t2 * grad_curr < 0`.
    fn rule(&mut self, k: usize, increment_norm: T, grad_t2: T, grad_curr: T) -> StepRule<T> {
        let Some((alpha_post, delta_post)) = self.post else {
            return StepRule {
                alpha: self.alpha,
                delta: self.delta,
                phase: Phase::NotApplicable,
            };
        };
        let (phase, latched) = switching_policy(SwitchState {
            k,
            delta_k: increment_norm,
            grad_t2,
            grad_curr,
            latched: self.latched,
        });
        self.latched = latched;
        match phase {
            Phase::PostSwitch => StepRule {
                alpha: alpha_post,
                delta: delta_post,
                phase,
            },
            _ => StepRule {
                alpha: self.alpha,
                delta: T::zero(),
                phase,
            },
        }
    }
}

/// Runs the configured method on a scalar objective.
///
/// Records are produced for `k = 1 ..= max_iter` unless a stopping rule
/// fires first:
/// - `ToleranceMet` after `stationary_window` consecutive `|Δ_k| < tol_abs`;
/// - `DivergenceDetected` when `t_k`, `f'(t_k)` or `f(t_k)` leaves the
///   finite range or exceeds [`divergence_threshold`];
/// - `ZeroStepFixedPoint` when the step multiplier vanishes at a zero
///   increment (`alpha < 1`) or the singular `alpha > 1` multiplier meets a
///   zero gradient.
///
/// A singular multiplier with nonzero gradient is an error.
pub fn run<T: Scalar>(obj: &ScalarObjective<T>, cfg: &OptimizerConfig<T>) -> Result<Trace<T>> {
    cfg.validate()?;
    let mut sched = Scheduler::new(cfg, obj.metadata().lipschitz_mu)?;
    let limit = divergence_threshold::<T>();

    let t1 = cfg.t1;
    let g1 = obj.gradient(t1);
    let seeded = cfg.t2.is_none();
    let t2 = cfg.t2.unwrap_or(t1 - cfg.rho * g1);
    let mut records = vec![IterationRecord {
        k: 1,
        t: t1,
        f_value: obj.evaluate(t1),
        grad: g1,
        delta_k: T::zero(),
        effective_step: if seeded { cfg.rho } else { T::nan() },
        phase: sched.seed_phase(),
    }];
    if diverged(&[t1, g1, records[0].f_value], limit) {
        return Ok(Trace {
            records,
            termination: Termination::DivergenceDetected,
        });
    }
    if cfg.max_iter == 1 {
        return Ok(Trace {
            records,
            termination: Termination::MaxIterReached,
        });
    }

    let (mut prev, mut curr) = (t1, t2);
    let mut quiet_steps = 0usize;
    let mut grad_t2 = None;
    let mut k = 2usize;
    let termination = loop {
        let g = obj.gradient(curr);
        let f = obj.evaluate(curr);
        let dk = curr - prev;
        let g2 = *grad_t2.get_or_insert(g);
        let rule = sched.rule(k, dk.abs(), g2, g);
        let mut record = IterationRecord {
            k,
            t: curr,
            f_value: f,
            grad: g,
            delta_k: dk,
            effective_step: T::nan(),
            phase: rule.phase,
        };
        if diverged(&[curr, g, f], limit) {
            records.push(record);
            break Termination::DivergenceDetected;
        }
        let eff = if cfg.method == Method::Gm {
            cfg.rho
        } else {
            match multiplier(dk, rule.alpha, rule.delta) {
                Multiplier::Finite(m) => cfg.rho * m,
                Multiplier::Singular if g.is_zero() => T::zero(),
                Multiplier::Singular => return Err(FogmError::SingularStep { k }),
            }
        };
        record.effective_step = eff;
        records.push(record);
        if eff.is_zero() {
            break Termination::ZeroStepFixedPoint;
        }
        quiet_steps = if dk.abs() < cfg.tol_abs { quiet_steps + 1 } else { 0 };
        if quiet_steps >= cfg.stationary_window {
            break Termination::ToleranceMet;
        }
        if k >= cfg.max_iter {
            break Termination::MaxIterReached;
        }
        let next = curr - eff * g;
        prev = curr;
        curr = next;
        k += 1;
    };
    Ok(Trace {
        records,
        termination,
    })
}

/// Componentwise vector extension:
/// `t_{k+1} = t_k - rho * grad(t_k) ⊙ (|t_k - t_{k-1}| + delta)^(1 - alpha)`.
///
/// The switching rule uses the max-norm of the increment and the inner
/// product `∇f(t_2) · ∇f(t_k)`. At dimension one this reproduces [`run`]
/// bit-for-bit.
pub fn run_vector<T: Scalar>(
    obj: &VectorObjective<T>,
    cfg: &OptimizerConfig<T>,
    t1: &[T],
    t2: Option<&[T]>,
) -> Result<VectorTrace<T>> {
    cfg.validate()?;
    let n = obj.dimension();
    if t1.len() != n || t2.is_some_and(|t| t.len() != n) {
        return Err(FogmError::InvalidConfig(format!(
            "initial points must have dimension {n}"
        )));
    }
    if t1.iter().chain(t2.into_iter().flatten()).any(|x| !x.is_finite()) {
        return Err(FogmError::InvalidConfig("initial points must be finite".into()));
    }
    let mut sched = Scheduler::new(cfg, obj.lipschitz_mu())?;
    let limit = divergence_threshold::<T>();
    let gradient = |t: &[T]| -> Result<Vec<T>> {
        let g = obj.gradient(t);
        if g.len() != n {
            return Err(FogmError::DomainError(format!(
                "gradient has {} components, expected {n}",
                g.len()
            )));
        }
        Ok(g)
    };

    let g1 = gradient(t1)?;
    let seeded = t2.is_none();
    let t2: Vec<T> = match t2 {
        Some(t) => t.to_vec(),
        None => t1.iter().zip(&g1).map(|(&x, &g)| x - cfg.rho * g).collect(),
    };
    let f1 = obj.evaluate(t1);
    let first_diverged = diverged(t1, limit) || diverged(&g1, limit) || diverged(&[f1], limit);
    let mut records = vec![VectorRecord {
        k: 1,
        t: t1.to_vec(),
        f_value: f1,
        grad: g1,
        delta_k: vec![T::zero(); n],
        effective_step: vec![if seeded { cfg.rho } else { T::nan() }; n],
        phase: sched.seed_phase(),
    }];
    if first_diverged || cfg.max_iter == 1 {
        let termination = if first_diverged {
            Termination::DivergenceDetected
        } else {
            Termination::MaxIterReached
        };
        return Ok(VectorTrace {
            records,
            termination,
        });
    }

    let (mut prev, mut curr) = (t1.to_vec(), t2);
    let mut quiet_steps = 0usize;
    let mut k = 2usize;
    let termination = loop {
        let g = gradient(&curr)?;
        let f = obj.evaluate(&curr);
        let dk: Vec<T> = curr.iter().zip(&prev).map(|(&a, &b)| a - b).collect();
        let grad_t2 = if k == 2 { &g } else { &records[1].grad };
        let grad_dot = grad_t2
            .iter()
            .zip(&g)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b);
        let max_step = dk.iter().fold(T::zero(), |m, d| m.max(d.abs()));
        let rule = sched.rule(k, max_step, grad_dot, T::one());
        let mut record = VectorRecord {
            k,
            t: curr.clone(),
            f_value: f,
            grad: g.clone(),
            delta_k: dk.clone(),
            effective_step: vec![T::nan(); n],
            phase: rule.phase,
        };
        if diverged(&curr, limit) || diverged(&g, limit) || diverged(&[f], limit) {
            records.push(record);
            break Termination::DivergenceDetected;
        }
        let mut eff = Vec::with_capacity(n);
        for (&d, &gi) in dk.iter().zip(&g) {
            let e = if cfg.method == Method::Gm {
                cfg.rho
            } else {
                match multiplier(d, rule.alpha, rule.delta) {
                    Multiplier::Finite(m) => cfg.rho * m,
                    Multiplier::Singular if gi.is_zero() => T::zero(),
                    Multiplier::Singular => return Err(FogmError::SingularStep { k }),
                }
            };
            eff.push(e);
        }
        let fixed = eff.iter().all(|e| e.is_zero());
        record.effective_step = eff.clone();
        records.push(record);
        if fixed {
            break Termination::ZeroStepFixedPoint;
        }
        quiet_steps = if max_step < cfg.tol_abs { quiet_steps + 1 } else { 0 };
        if quiet_steps >= cfg.stationary_window {
            break Termination::ToleranceMet;
        }
        if k >= cfg.max_iter {
            break Termination::MaxIterReached;
        }
        let next: Vec<T> = curr
            .iter()
            .zip(eff.iter().zip(&g))
            .map(|(&x, (&e, &gi))| x - e * gi)
            .collect();
        prev = std::mem::replace(&mut curr, next);
        k += 1;
    };
    Ok(VectorTrace {
        records,
        termination,
    })
}
