mod common;

use common::{caputo_quadrature, gamma_stirling};
use fogm::fracderiv::{caputo_power, caputo_series, gamma, rl_series, series_table, FracSeriesSpec};
use fogm::objective::Polynomial;
use proptest::prelude::*;

const ALPHAS: [f64; 3] = [0.25, 0.5, 0.75];
const POINTS: [f64; 3] = [0.5, 1.0, 2.0];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn lanczos_agrees_with_stirling() {
    for i in 1..400 {
        let x = 0.05 * i as f64;
        let (a, b) = (gamma(x).unwrap(), gamma_stirling(x));
        assert!(rel(a, b) < 1e-13, "x={x}: {a} vs {b}");
    }
}

#[test]
fn monomials_match_power_rule_from_zero() {
    // D^a t^k = k! / Γ(k + 1 - a) t^(k - a), with factorials written out
    for (k, kfact) in [(2usize, 2.0), (3, 6.0)] {
        let p = Polynomial::monomial(k);
        for a in ALPHAS {
            for t in POINTS {
                let series = caputo_series(&p, &FracSeriesSpec::caputo(a, 0.0, t, k)).unwrap();
                let oracle = kfact / gamma_stirling(k as f64 + 1.0 - a) * t.powf(k as f64 - a);
                assert!(rel(series, oracle) <= 1e-10, "k={k} a={a} t={t}");
                let closed = caputo_power(k, a, 0.0, t).unwrap();
                assert!(rel(series, closed) <= 1e-12);
            }
        }
    }
}

#[test]
fn shifted_base_point_matches_quadrature() {
    let p = Polynomial::new(vec![0.5, -1.0, 2.0, 1.0]);
    let dp = p.derivative();
    for a in ALPHAS {
        for (t0, t) in [(-0.5, 0.5), (0.25, 1.0), (1.0, 2.0)] {
            let series = caputo_series(&p, &FracSeriesSpec::caputo(a, t0, t, 3)).unwrap();
            let quad = caputo_quadrature(|x| dp.evaluate(x), a, t0, t);
            assert!(rel(series, quad) < 1e-8, "a={a} [{t0},{t}] {series} vs {quad}");
        }
    }
}

#[test]
fn rl_minus_caputo_is_constant_term() {
    for coeffs in [vec![0.0, 0.0, 1.0], vec![0.0, 0.0, 0.0, 1.0], vec![3.0, -2.0, 1.0, 0.5]] {
        let p = Polynomial::new(coeffs);
        for a in ALPHAS {
            for t in POINTS {
                let t0 = 0.2;
                let c = caputo_series(&p, &FracSeriesSpec::caputo(a, t0, t, 8)).unwrap();
                let r = rl_series(&p, &FracSeriesSpec::riemann_liouville(a, t0, t, 8)).unwrap();
                let constant =
                    p.evaluate(t0) * (t - t0).powf(-a) / gamma_stirling(1.0 - a);
                let diff = r - c;
                assert!((diff - constant).abs() <= 1e-10 * constant.abs().max(1.0), "a={a} t={t}");
            }
        }
    }
}

#[test]
fn table_reaches_closed_form_at_degree() {
    let p = Polynomial::monomial(3);
    let closed = caputo_power(3, 0.5, 0.0, 1.0).unwrap();
    let rows = series_table(&p, &FracSeriesSpec::caputo(0.5, 1e-9, 1.0, 5), closed).unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows[2].rel_err < 1e-8);
    assert!(rows[3].term == 0.0 && rows[4].term == 0.0);
}

proptest! {
    #[test]
    fn partial_sums_are_monotone_for_positive_derivatives(
        a in 0.05f64..0.95,
        h in 0.01f64..3.0,
        c in proptest::collection::vec(0.0f64..5.0, 2..6),
    ) {
        // base point 0: derivatives there are the nonnegative coefficients
        let p = Polynomial::new(c.clone());
        let n = c.len();
        let spec = FracSeriesSpec::caputo(a, 0.0, h, n);
        let rows = series_table(&p, &spec, 1.0).unwrap();
        for w in rows.windows(2) {
            prop_assert!(w[1].partial_sum >= w[0].partial_sum);
        }
    }

    #[test]
    fn caputo_is_linear(
        a in 0.05f64..0.95,
        h in 0.05f64..2.0,
        x in proptest::collection::vec(-3.0f64..3.0, 4),
        y in proptest::collection::vec(-3.0f64..3.0, 4),
        s in -2.0f64..2.0,
    ) {
        let px = Polynomial::new(x.clone());
        let py = Polynomial::new(y.clone());
        let sum = Polynomial::new(x.iter().zip(&y).map(|(a, b)| a + s * b).collect());
        let spec = FracSeriesSpec::caputo(a, 0.0, h, 4);
        let lhs = caputo_series(&sum, &spec).unwrap();
        let rhs = caputo_series(&px, &spec).unwrap() + s * caputo_series(&py, &spec).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }
}
