use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

use super::ScalarObjective;

type VectorValueFn<T> = Arc<dyn Fn(&[T]) -> T + Send + Sync>;
type VectorGradFn<T> = Arc<dyn Fn(&[T]) -> Vec<T> + Send + Sync>;

/// A pure function on `R^n` with its gradient.
#[derive(Clone)]
pub struct VectorObjective<T> {
    name: String,
    dimension: usize,
    value: VectorValueFn<T>,
    gradient: VectorGradFn<T>,
    extremum: Option<Vec<T>>,
    lipschitz_mu: Option<T>,
}

impl<T: Scalar> VectorObjective<T> {
    /// Panics if `dimension` is zero.
    pub fn new<F, G>(name: impl Into<String>, dimension: usize, value: F, gradient: G) -> Self
    where
        F: Fn(&[T]) -> T + Send + Sync + 'static,
        G: Fn(&[T]) -> Vec<T> + Send + Sync + 'static,
    {
        assert!(dimension > 0, "vector objective needs dimension >= 1");
        Self {
            name: name.into(),
            dimension,
            value: Arc::new(value),
            gradient: Arc::new(gradient),
            extremum: None,
            lipschitz_mu: None,
        }
    }

    pub fn with_extremum(mut self, extremum: Vec<T>) -> Self {
        assert_eq!(extremum.len(), self.dimension);
        self.extremum = Some(extremum);
        self
    }

    pub fn with_lipschitz_mu(mut self, mu: T) -> Self {
        self.lipschitz_mu = Some(mu);
        self
    }

    /// `sum_i (t_i - c_i)^2`.
    pub fn separable_quadratic(centers: Vec<T>) -> Self {
        let two = T::lit(2.0);
        let (cv, cg) = (centers.clone(), centers.clone());
        Self::new(
            format!("sepquad:{centers:?}"),
            centers.len(),
            move |t: &[T]| {
                t.iter()
                    .zip(&cv)
                    .fold(T::zero(), |acc, (&x, &c)| acc + (x - c) * (x - c))
            },
            move |t: &[T]| t.iter().zip(&cg).map(|(&x, &c)| two * (x - c)).collect(),
        )
        .with_extremum(centers)
        .with_lipschitz_mu(two)
    }

    /// The one-dimensional view of a scalar objective.
    pub fn from_scalar(obj: &ScalarObjective<T>) -> Self {
        let (fv, fg) = (obj.clone(), obj.clone());
        let mut v = Self::new(
            obj.name().to_string(),
            1,
            move |t: &[T]| fv.evaluate(t[0]),
            move |t: &[T]| vec![fg.gradient(t[0])],
        );
        v.extremum = obj.extremum().map(|e| vec![e]);
        v.lipschitz_mu = obj.metadata().lipschitz_mu;
        v
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn evaluate(&self, t: &[T]) -> T {
        (self.value)(t)
    }

    pub fn gradient(&self, t: &[T]) -> Vec<T> {
        (self.gradient)(t)
    }

    pub fn extremum(&self) -> Option<&[T]> {
        self.extremum.as_deref()
    }

    pub fn lipschitz_mu(&self) -> Option<T> {
        self.lipschitz_mu
    }
}

impl<T: Scalar> fmt::Debug for VectorObjective<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VectorObjective")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("extremum", &self.extremum)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::quadratic;

    #[test]
    fn separable_quadratic_zero_gradient_at_extremum() {
        let f = VectorObjective::separable_quadratic(vec![1.0_f64, -2.0]);
        let g = f.gradient(f.extremum().unwrap());
        assert!(g.iter().all(|x| x.abs() <= 1e-12));
        assert_eq!(f.evaluate(&[0.0, 0.0]), 5.0);
        assert_eq!(f.gradient(&[0.0, 0.0]), vec![-2.0, 4.0]);
    }

    #[test]
    fn scalar_view_matches() {
        let q = quadratic(3.0_f64);
        let v = VectorObjective::from_scalar(&q);
        assert_eq!(v.dimension(), 1);
        assert_eq!(v.gradient(&[0.5]), vec![q.gradient(0.5)]);
        assert_eq!(v.extremum(), Some(&[3.0][..]));
        assert_eq!(v.lipschitz_mu(), Some(2.0));
    }
}
