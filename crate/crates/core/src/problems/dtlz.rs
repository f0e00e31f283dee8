use super::{check_count, Problem};
use crate::domain::{Bounds, ObjectiveVector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Two-objective DTLZ2 on `[0,1]^n`. The front is the quarter unit circle.
#[derive(Debug, Clone)]
pub struct Dtlz2<T> {
    bounds: Bounds<T>,
}

impl<T: Scalar> Dtlz2<T> {
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidConfig(format!(
                "dtlz2 needs at least 2 variables, got {dim}"
            )));
        }
        Ok(Self {
            bounds: Bounds::new(vec![T::zero(); dim], vec![T::one(); dim])?,
        })
    }

    /// Distance function `g = Σ_{i≥2} (x_i − 0.5)²`.
    pub fn g(x: &[T]) -> T {
        let half = T::lit(0.5);
        x[1..].iter().map(|&v| (v - half) * (v - half)).sum()
    }
}

impl<T: Scalar> Problem<T> for Dtlz2<T> {
    fn name(&self) -> &str {
        "dtlz2"
    }

    fn dim(&self) -> usize {
        self.bounds.dim()
    }

    fn bounds(&self) -> &Bounds<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<ObjectiveVector<T>> {
        self.bounds.check(x)?;
        let radius = T::one() + Self::g(x);
        let angle = x[0] * T::FRAC_PI_2();
        Ok(ObjectiveVector::new(vec![
            radius * angle.cos(),
            radius * angle.sin(),
        ]))
    }

    /// Uniform in angle over the quarter circle.
    fn sample_front(&self, count: usize) -> Result<Vec<ObjectiveVector<T>>> {
        check_count(count)?;
        let last = T::from_count(count - 1);
        Ok((0..count)
            .map(|i| {
                let t = T::FRAC_PI_2() * T::from_count(i) / last;
                ObjectiveVector::new(vec![t.cos(), t.sin()])
            })
            .collect())
    }
}
