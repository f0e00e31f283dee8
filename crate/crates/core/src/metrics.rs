//! Quality indicators: IGD against the region-of-interest part of the true
//! front, decision-space uniformity and cone membership.

use crate::cone::{in_cone, PreferenceCone};
use crate::domain::ObjectiveVector;
use crate::dwu::uniformity;
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::scalar::{euclidean, Scalar};

/// Analytic front samples that fall inside the preference cone.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSet<T> {
    pub points: Vec<ObjectiveVector<T>>,
    /// Number of front samples drawn before filtering.
    pub sampled: usize,
}

impl<T: Scalar> ReferenceSet<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Metric values for one final solution set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport<T> {
    pub igd: T,
    pub uniformity: T,
    /// Uniformity after mapping decision vectors into the unit box.
    pub uniformity_normalized: T,
    pub roi_membership_rate: T,
    pub reference_size: usize,
}

/// Samples `count` points of the true front and keeps those inside the cone.
pub fn roi_reference_set<T: Scalar>(
    problem: &dyn Problem<T>,
    cone: &PreferenceCone<T>,
    count: usize,
) -> Result<ReferenceSet<T>> {
    let mut points = Vec::new();
    for p in problem.sample_front(count)? {
        if in_cone(&p, cone)? {
            points.push(p);
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyReferenceSet);
    }
    Ok(ReferenceSet {
        points,
        sampled: count,
    })
}

/// Inverted generational distance: mean over reference points of the
/// distance to the nearest solution.
pub fn igd<T: Scalar, R: AsRef<[T]>, S: AsRef<[T]>>(reference: &[R], solutions: &[S]) -> Result<T> {
    if reference.is_empty() {
        return Err(Error::Empty("reference set"));
    }
    if solutions.is_empty() {
        return Err(Error::Empty("solution set"));
    }
    let total: T = reference
        .iter()
        .map(|r| {
            solutions
                .iter()
                .map(|s| euclidean(r.as_ref(), s.as_ref()))
                .fold(T::infinity(), T::min)
        })
        .sum();
    Ok(total / T::from_count(reference.len()))
}

/// Uniformity of a final decision set.
pub fn final_uniformity<T: Scalar, V: AsRef<[T]>>(solutions: &[V]) -> Result<T> {
    uniformity(solutions)
}

/// Fraction of `solutions` inside the cone.
pub fn roi_membership_rate<T: Scalar, V: AsRef<[T]>>(
    solutions: &[V],
    cone: &PreferenceCone<T>,
) -> Result<T> {
    if solutions.is_empty() {
        return Err(Error::Empty("solution set"));
    }
    let mut inside = 0;
    for s in solutions {
        if in_cone(s.as_ref(), cone)? {
            inside += 1;
        }
    }
    Ok(T::from_count(inside) / T::from_count(solutions.len()))
}
