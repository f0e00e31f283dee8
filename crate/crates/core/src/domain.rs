//! Value types shared by every module: decision and objective vectors,
//! individuals with their cached scores, and populations.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point `x` in decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionVector<T>(Vec<T>);

impl<T: Scalar> DecisionVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self(values)
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.0
    }
}

impl<T> AsRef<[T]> for DecisionVector<T> {
    fn as_ref(&self) -> &[T] {
        &self.0
    }
}

impl<T> Deref for DecisionVector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T: Scalar> From<Vec<T>> for DecisionVector<T> {
    fn from(values: Vec<T>) -> Self {
        Self(values)
    }
}

/// The image `F(x)` of a decision vector in objective space.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector<T>(Vec<T>);

impl<T: Scalar> ObjectiveVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self(values)
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    /// Pareto dominance under minimization; see [`dominates`].
    pub fn dominates(&self, other: &Self) -> bool {
        dominates_unchecked(&self.0, &other.0)
    }
}

impl<T> AsRef<[T]> for ObjectiveVector<T> {
    fn as_ref(&self) -> &[T] {
        &self.0
    }
}

impl<T> Deref for ObjectiveVector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T: Scalar> From<Vec<T>> for ObjectiveVector<T> {
    fn from(values: Vec<T>) -> Self {
        Self(values)
    }
}

/// Per-coordinate box constraints of a decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds<T> {
    pub lower: Vec<T>,
    pub upper: Vec<T>,
}

impl<T: Scalar> Bounds<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                found: upper.len(),
            });
        }
        if lower.iter().zip(&upper).any(|(l, u)| !(l <= u)) {
            return Err(Error::InvalidConfig("lower bound above upper bound".into()));
        }
        Ok(Self { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, x: &[T]) -> bool {
        self.check(x).is_ok()
    }

    /// Errors on the first coordinate outside its interval.
    pub fn check(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        for (index, ((&v, &l), &u)) in x.iter().zip(&self.lower).zip(&self.upper).enumerate() {
            if !(v >= l && v <= u) {
                return Err(Error::OutOfBounds {
                    index,
                    value: v.as_f64(),
                    lower: l.as_f64(),
                    upper: u.as_f64(),
                });
            }
        }
        Ok(())
    }

    pub fn clip(&self, x: &mut [T]) {
        for ((v, &l), &u) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.max(l).min(u);
        }
    }

    /// Maps `x` into the unit box.
    pub fn normalize(&self, x: &[T]) -> Vec<T> {
        x.iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .map(|((&v, &l), &u)| if u > l { (v - l) / (u - l) } else { T::zero() })
            .collect()
    }
}

/// Returns true when `a` Pareto-dominates `b` (minimization): `a_i <= b_i`
/// for every `i` and `a != b`.
///
/// Equality is exact floating-point equality.
pub fn dominates<T: Scalar>(a: &[T], b: &[T]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked<T: Scalar>(a: &[T], b: &[T]) -> bool {
    let mut strictly_better = false;
    for (&x, &y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// A candidate solution with its cached objective image and derived scores.
///
/// The derived fields are recomputed wholesale by
/// [`Population::refresh`](crate::domain::Population::refresh) whenever the
/// membership of the population changes.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual<T> {
    pub decision: DecisionVector<T>,
    pub objectives: ObjectiveVector<T>,
    /// Number of members whose image this one dominates.
    pub strength: usize,
    /// Sum of the strengths of all members dominating this one.
    pub raw_dominance: usize,
    /// 1-based non-domination level.
    pub front_level: usize,
    /// Front level after the out-of-cone penalty.
    pub penalized_front_level: usize,
    /// Angle between the objective image and the cone axis, in radians.
    pub angular_distance: T,
    pub crowding: T,
}

impl<T: Scalar> Individual<T> {
    pub fn new(decision: DecisionVector<T>, objectives: ObjectiveVector<T>) -> Self {
        Self {
            decision,
            objectives,
            strength: 0,
            raw_dominance: 0,
            front_level: 1,
            penalized_front_level: 1,
            angular_distance: T::zero(),
            crowding: T::zero(),
        }
    }
}

/// An ordered set of individuals plus the generation counter and the
/// cumulative number of objective evaluations spent so far.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<T> {
    pub members: Vec<Individual<T>>,
    pub generation: usize,
    pub evaluations: usize,
}

impl<T: Scalar> Population<T> {
    pub fn new(members: Vec<Individual<T>>) -> Self {
        Self {
            members,
            generation: 0,
            evaluations: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn objectives(&self) -> Vec<ObjectiveVector<T>> {
        self.members.iter().map(|m| m.objectives.clone()).collect()
    }

    pub fn decisions(&self) -> Vec<DecisionVector<T>> {
        self.members.iter().map(|m| m.decision.clone()).collect()
    }
}
