//! WFG4 and WFG9 for two objectives.
//!
//! Variables `z_i ∈ [0, 2i]` are normalized to `[0, 1]`, pushed through the
//! problem's transition transformations down to one position value and one
//! distance value, and mapped onto the concave front
//! `(f1/2)² + (f2/4)² = 1` scaled by `S = (2, 4)`.

use super::{check_count, Problem};
use crate::domain::{Bounds, ObjectiveVector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Multi-modal shift.
pub fn s_multi<T: Scalar>(y: T, a: T, b: T, c: T) -> T {
    let two = T::lit(2.0);
    let ratio = (y - c).abs() / (two * ((c - y).floor() + c));
    let angle = (T::lit(4.0) * a + two) * T::PI() * (T::lit(0.5) - ratio);
    (T::one() + angle.cos() + T::lit(4.0) * b * ratio * ratio) / (b + two)
}

/// Deceptive shift.
pub fn s_decept<T: Scalar>(y: T, a: T, b: T, c: T) -> T {
    let one = T::one();
    let left = (y - a + b).floor() * (one - c + (a - b) / b) / (a - b);
    let right = (a + b - y).floor() * (one - c + (one - a - b) / b) / (one - a - b);
    one + ((y - a).abs() - b) * (left + right + one / b)
}

/// Parameter-dependent bias; `u` is the reduction of the driving variables.
pub fn b_param<T: Scalar>(y: T, u: T, a: T, b: T, c: T) -> T {
    let two = T::lit(2.0);
    let v = a - (T::one() - two * u) * ((T::lit(0.5) - u).floor() + a).abs();
    y.powf(b + (c - b) * v)
}

/// Unit-weight sum reduction (the mean).
pub fn r_sum<T: Scalar>(y: &[T]) -> T {
    y.iter().copied().sum::<T>() / T::from_count(y.len())
}

/// Non-separable reduction with degree `degree`.
pub fn r_nonsep<T: Scalar>(y: &[T], degree: usize) -> T {
    let n = y.len();
    let mut numerator = T::zero();
    for j in 0..n {
        numerator = numerator + y[j];
        for k in 0..degree.saturating_sub(1) {
            numerator = numerator + (y[j] - y[(1 + j + k) % n]).abs();
        }
    }
    let half_up = degree.div_ceil(2);
    let denominator = T::from_count(n) / T::from_count(degree)
        * T::from_count(half_up)
        * T::from_count(1 + 2 * degree - 2 * half_up);
    numerator / denominator
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WfgVariant {
    Wfg4,
    Wfg9,
}

/// A two-objective WFG instance with `position` position-related and
/// `dim − position` distance-related parameters.
#[derive(Debug, Clone)]
pub struct Wfg<T> {
    variant: WfgVariant,
    position: usize,
    bounds: Bounds<T>,
}

impl<T: Scalar> Wfg<T> {
    pub fn new(variant: WfgVariant, dim: usize, position: usize) -> Result<Self> {
        if position == 0 || position >= dim {
            return Err(Error::InvalidConfig(format!(
                "wfg needs 1 <= position parameters < dim, got {position} of {dim}"
            )));
        }
        let upper = (1..=dim).map(|i| T::from_count(2 * i)).collect();
        Ok(Self {
            variant,
            position,
            bounds: Bounds::new(vec![T::zero(); dim], upper)?,
        })
    }

    pub fn variant(&self) -> WfgVariant {
        self.variant
    }

    pub fn position_params(&self) -> usize {
        self.position
    }

    /// The reduced pair `(t1, t2)`: position value and distance value.
    pub fn reduce(&self, z: &[T]) -> (T, T) {
        let mut y: Vec<T> = z
            .iter()
            .enumerate()
            .map(|(i, &v)| v / T::from_count(2 * (i + 1)))
            .collect();
        let k = self.position;
        match self.variant {
            WfgVariant::Wfg4 => {
                let (a, b, c) = (T::lit(30.0), T::lit(10.0), T::lit(0.35));
                for v in &mut y {
                    *v = s_multi(*v, a, b, c);
                }
                (r_sum(&y[..k]), r_sum(&y[k..]))
            }
            WfgVariant::Wfg9 => {
                let n = y.len();
                let (a, b, c) = (T::lit(0.98 / 49.98), T::lit(0.02), T::lit(50.0));
                // each bias depends on the untransformed tail, so go forward
                // and read only indices above i
                for i in 0..n - 1 {
                    let u = r_sum(&y[i + 1..]);
                    y[i] = b_param(y[i], u, a, b, c);
                }
                for (i, v) in y.iter_mut().enumerate() {
                    *v = if i < k {
                        s_decept(*v, T::lit(0.35), T::lit(0.001), T::lit(0.05))
                    } else {
                        s_multi(*v, T::lit(30.0), T::lit(95.0), T::lit(0.35))
                    };
                }
                (r_nonsep(&y[..k], k), r_nonsep(&y[k..], n - k))
            }
        }
    }

    /// A decision vector on the Pareto set with the given normalized position
    /// value in `[0, 1]`.
    pub fn optimal_solution(&self, position: T) -> Vec<T> {
        let n = self.dim();
        let k = self.position;
        let mut y = vec![position; n];
        for v in &mut y[k..] {
            *v = T::lit(0.35);
        }
        if self.variant == WfgVariant::Wfg9 {
            let (a, b, c) = (T::lit(0.98 / 49.98), T::lit(0.02), T::lit(50.0));
            let two = T::lit(2.0);
            for i in (k..n - 1).rev() {
                let u = r_sum(&y[i + 1..]);
                let exponent = b
                    + (c - b) * (a - (T::one() - two * u) * ((T::lit(0.5) - u).floor() + a).abs());
                y[i] = T::lit(0.35).powf(T::one() / exponent);
            }
        }
        y.iter()
            .enumerate()
            .map(|(i, &v)| v * T::from_count(2 * (i + 1)))
            .collect()
    }
}

impl<T: Scalar> Problem<T> for Wfg<T> {
    fn name(&self) -> &str {
        match self.variant {
            WfgVariant::Wfg4 => "wfg4",
            WfgVariant::Wfg9 => "wfg9",
        }
    }

    fn dim(&self) -> usize {
        self.bounds.dim()
    }

    fn bounds(&self) -> &Bounds<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<ObjectiveVector<T>> {
        self.bounds.check(x)?;
        let (position, distance) = self.reduce(x);
        // degeneracy constant A = 1 leaves the position value unchanged
        let shaped = distance.max(T::one()) * (position - T::lit(0.5)) + T::lit(0.5);
        let angle = shaped * T::FRAC_PI_2();
        Ok(ObjectiveVector::new(vec![
            distance + T::lit(2.0) * angle.sin(),
            distance + T::lit(4.0) * angle.cos(),
        ]))
    }

    /// Points on `(2 cos t, 4 sin t)`, spaced evenly in arc length.
    fn sample_front(&self, count: usize) -> Result<Vec<ObjectiveVector<T>>> {
        check_count(count)?;
        Ok(ellipse_arc_samples::<T>(count)
            .into_iter()
            .map(|t| ObjectiveVector::new(vec![T::lit(2.0) * t.cos(), T::lit(4.0) * t.sin()]))
            .collect())
    }
}

/// Parameters `t ∈ [0, π/2]` at equal arc-length steps along the quarter
/// ellipse with semi-axes 2 and 4.
fn ellipse_arc_samples<T: Scalar>(count: usize) -> Vec<T> {
    let grid = 64 * count;
    let step = T::FRAC_PI_2() / T::from_count(grid);
    let point = |t: T| (T::lit(2.0) * t.cos(), T::lit(4.0) * t.sin());
    let mut cumulative = Vec::with_capacity(grid + 1);
    cumulative.push(T::zero());
    let mut prev = point(T::zero());
    for i in 1..=grid {
        let p = point(step * T::from_count(i));
        let seg = ((p.0 - prev.0).powi(2) + (p.1 - prev.1).powi(2)).sqrt();
        cumulative.push(cumulative[i - 1] + seg);
        prev = p;
    }
    let total = cumulative[grid];
    let mut out = Vec::with_capacity(count);
    let mut seg = 0;
    for j in 0..count {
        if j == count - 1 {
            out.push(T::FRAC_PI_2());
            break;
        }
        let target = total * T::from_count(j) / T::from_count(count - 1);
        while seg + 1 < grid && cumulative[seg + 1] < target {
            seg += 1;
        }
        let span = cumulative[seg + 1] - cumulative[seg];
        let frac = if span > T::zero() {
            (target - cumulative[seg]) / span
        } else {
            T::zero()
        };
        out.push(step * (T::from_count(seg) + frac));
    }
    out
}
