#![allow(dead_code)]

/// Gamma by upward shift and Stirling's series; independent of the crate's
/// Lanczos implementation.
pub fn gamma_stirling(x: f64) -> f64 {
    assert!(x > 0.0);
    let shift = 12;
    let mut denom = 1.0;
    let mut z = x;
    for _ in 0..shift {
        denom *= z;
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    let ln = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series;
    ln.exp() / denom
}

/// Composite Simpson rule on `[a, b]` with `n` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n.is_multiple_of(2));
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + h * i as f64);
    }
    s * h / 3.0
}

/// Caputo derivative by quadrature after substituting `u = (t - τ)^(1-α)`,
/// which removes the endpoint singularity.
pub fn caputo_quadrature(df: impl Fn(f64) -> f64, alpha: f64, t0: f64, t: f64) -> f64 {
    let beta = 1.0 - alpha;
    let upper = (t - t0).powf(beta);
    let integral = simpson(|u| df(t - u.powf(1.0 / beta)), 0.0, upper, 20_000) / beta;
    integral / gamma_stirling(1.0 - alpha)
}
