use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::ScalarObjective;

/// Real polynomial with coefficients in ascending powers.
///
/// Trailing zero coefficients are dropped on construction, so the zero
/// polynomial has an empty coefficient list and degree 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial<T> {
    coefficients: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coefficients: Vec<T>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = T::one();
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn evaluate(&self, t: T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * T::from_usize_lossy(k))
                .collect(),
        )
    }

    /// `f^(order)(t)`, computed from the falling factorials of the
    /// coefficients; zero once `order` exceeds the degree.
    pub fn derivative_at(&self, t: T, order: usize) -> T {
        let mut acc = T::zero();
        for k in (order..self.coefficients.len()).rev() {
            let falling = ((k - order + 1)..=k)
                .fold(T::one(), |p, j| p * T::from_usize_lossy(j));
            acc = acc * t + self.coefficients[k] * falling;
        }
        acc
    }

    pub fn to_objective(&self) -> ScalarObjective<T> {
        let value = self.clone();
        let slope = self.derivative();
        ScalarObjective::new(
            format!("poly{:?}", self.coefficients),
            move |t| value.evaluate(t),
            move |t| slope.evaluate(t),
        )
    }
}
