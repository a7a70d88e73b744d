use crate::scalar::Scalar;

use super::{LocalLipschitz, Metadata, ScalarObjective};

/// `f(t) = (t - c)^2`: strongly convex with a Lipschitz gradient,
/// `mu = lambda = 2` and both orders equal to one.
pub fn quadratic<T: Scalar>(c: T) -> ScalarObjective<T> {
    let two = T::lit(2.0);
    ScalarObjective::new(
        format!("quadratic:c={c}"),
        move |t: T| (t - c) * (t - c),
        move |t: T| two * (t - c),
    )
    .with_metadata(Metadata {
        extremum: Some(c),
        lipschitz_mu: Some(two),
        strong_lambda: Some(two),
        lipschitz_order: Some(T::one()),
        convexity_order: Some(T::one()),
        local_lipschitz: None,
    })
}

/// `f(t) = |t - c|^(4/3)`, convex but neither strongly convex nor
/// globally Lipschitz-gradient.
///
/// The gradient `(4/3) sign(t - c) |t - c|^(1/3)` is exactly zero at `c`.
/// The only recorded Lipschitz information is the local 0.4-order bound
/// with unit constant that holds for `|t - c| > 1000`; the convexity order
/// is left for empirical estimation.
pub fn power_four_thirds<T: Scalar>(c: T) -> ScalarObjective<T> {
    let four_thirds = T::lit(4.0) / T::lit(3.0);
    let local = LocalLipschitz {
        mu: T::one(),
        order: T::lit(0.4),
        outside_radius: T::lit(1000.0),
    };
    ScalarObjective::new(
        format!("pow43:c={c}"),
        move |t: T| {
            let e = (t - c).abs();
            e * e.cbrt()
        },
        move |t: T| four_thirds * (t - c).cbrt(),
    )
    .with_metadata(Metadata {
        extremum: Some(c),
        lipschitz_mu: None,
        strong_lambda: None,
        lipschitz_order: Some(local.order),
        convexity_order: None,
        local_lipschitz: Some(local),
    })
}
