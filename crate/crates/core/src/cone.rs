//! Preference-cone geometry and the two out-of-cone penalties.
//!
//! A cone is an axis `v` in objective space plus an opening angle `θ`. An
//! objective vector lies in the region of interest when the angle between it
//! and `v` is at most `θ`. Points outside are penalized twice: their front
//! level is pushed back by `⌊exp(α(φ − θ))⌋`, and any pairwise
//! dominance-weighted uniformity they take part in is reduced by
//! `exp(β(φ − θ))`.

use crate::error::{Error, Result};
use crate::scalar::{dot, norm, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct PreferenceCone<T> {
    axis: Vec<T>,
    theta: T,
    alpha: T,
    beta: T,
}

impl<T: Scalar> PreferenceCone<T> {
    /// Builds a cone. `theta` must be positive, the axis must have positive
    /// norm and the penalty intensities must be non-negative.
    pub fn new(axis: Vec<T>, theta: T, alpha: T, beta: T) -> Result<Self> {
        if axis.is_empty() || !(norm(&axis) > T::zero()) {
            return Err(Error::InvalidConfig("cone axis must be nonzero".into()));
        }
        if axis.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidConfig("cone axis must be finite".into()));
        }
        if !(theta > T::zero()) || !theta.is_finite() {
            return Err(Error::InvalidConfig("cone angle must be positive".into()));
        }
        if !(alpha >= T::zero()) || !(beta >= T::zero()) {
            return Err(Error::InvalidConfig(
                "penalty intensities must be non-negative".into(),
            ));
        }
        Ok(Self {
            axis,
            theta,
            alpha,
            beta,
        })
    }

    pub fn axis(&self) -> &[T] {
        &self.axis
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn angular_distance(&self, y: &[T]) -> Result<T> {
        angular_distance(y, self)
    }

    /// Membership test on an already computed angle. The boundary is inside.
    #[inline]
    pub fn contains_angle(&self, phi: T) -> bool {
        phi <= self.theta
    }
}

/// Angle between `y` and the cone axis, `arccos(⟨y,v⟩ / (‖y‖‖v‖))`.
///
/// The cosine is clamped to `[-1, 1]` before `acos`.
pub fn angular_distance<T: Scalar>(y: &[T], cone: &PreferenceCone<T>) -> Result<T> {
    if y.len() != cone.axis.len() {
        return Err(Error::DimensionMismatch {
            expected: cone.axis.len(),
            found: y.len(),
        });
    }
    let ny = norm(y);
    if ny == T::zero() {
        return Err(Error::DegeneratePoint);
    }
    let cos = dot(y, &cone.axis) / (ny * norm(&cone.axis));
    Ok(cos.max(-T::one()).min(T::one()).acos())
}

pub fn in_cone<T: Scalar>(y: &[T], cone: &PreferenceCone<T>) -> Result<bool> {
    Ok(cone.contains_angle(angular_distance(y, cone)?))
}

/// `⌊exp(α(φ − θ))⌋`, the integer added to the front level of an
/// out-of-cone point.
pub fn front_penalty<T: Scalar>(phi: T, cone: &PreferenceCone<T>) -> usize {
    (cone.alpha * (phi - cone.theta))
        .exp()
        .floor()
        .to_usize()
        .unwrap_or(usize::MAX)
}

/// Front level after penalization. Unchanged inside the cone.
pub fn penalized_front_level<T: Scalar>(
    front_level: usize,
    phi: T,
    cone: &PreferenceCone<T>,
) -> usize {
    if cone.contains_angle(phi) {
        front_level
    } else {
        front_level.saturating_add(front_penalty(phi, cone))
    }
}

/// `exp(β(φ − θ))`, subtracted from the pairwise uniformity weight when an
/// endpoint is outside the cone. No floor.
pub fn dwu_penalty<T: Scalar>(phi: T, cone: &PreferenceCone<T>) -> T {
    (cone.beta * (phi - cone.theta)).exp()
}
