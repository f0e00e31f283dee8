//! Bi-objective benchmark problems and analytic Pareto-front samplers.

mod dtlz;
mod wfg;

use std::fmt;
use std::str::FromStr;

pub use dtlz::Dtlz2;
pub use wfg::{b_param, r_nonsep, r_sum, s_decept, s_multi, Wfg, WfgVariant};

use crate::domain::{Bounds, ObjectiveVector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An evaluable benchmark. Evaluation must be pure and deterministic.
pub trait Problem<T: Scalar>: Send + Sync {
    fn name(&self) -> &str;

    /// Decision dimension `n`.
    fn dim(&self) -> usize;

    fn num_objectives(&self) -> usize {
        2
    }

    fn bounds(&self) -> &Bounds<T>;

    /// Objective image of `x`. Rejects inputs outside the bounds.
    fn evaluate(&self, x: &[T]) -> Result<ObjectiveVector<T>>;

    /// `count` points on the true Pareto front, mutually non-dominated,
    /// ordered by decreasing `f1`.
    fn sample_front(&self, count: usize) -> Result<Vec<ObjectiveVector<T>>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    Dtlz2,
    Wfg4,
    Wfg9,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [ProblemKind::Dtlz2, ProblemKind::Wfg4, ProblemKind::Wfg9];

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Dtlz2 => "dtlz2",
            ProblemKind::Wfg4 => "wfg4",
            ProblemKind::Wfg9 => "wfg9",
        }
    }

    /// Instantiates the problem with the default WFG split (one position
    /// parameter).
    pub fn build<T: Scalar>(self, dim: usize) -> Result<Box<dyn Problem<T>>> {
        self.build_with_position(dim, 1)
    }

    /// Like [`build`](Self::build) with `position` WFG position parameters.
    /// Ignored for DTLZ2.
    pub fn build_with_position<T: Scalar>(
        self,
        dim: usize,
        position: usize,
    ) -> Result<Box<dyn Problem<T>>> {
        Ok(match self {
            ProblemKind::Dtlz2 => Box::new(Dtlz2::new(dim)?),
            ProblemKind::Wfg4 => Box::new(Wfg::new(WfgVariant::Wfg4, dim, position)?),
            ProblemKind::Wfg9 => Box::new(Wfg::new(WfgVariant::Wfg9, dim, position)?),
        })
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dtlz2" => Ok(ProblemKind::Dtlz2),
            "wfg4" => Ok(ProblemKind::Wfg4),
            "wfg9" => Ok(ProblemKind::Wfg9),
            other => Err(Error::UnknownProblem(other.to_string())),
        }
    }
}

/// Looks a problem up by its lowercase name.
pub fn problem_by_name<T: Scalar>(name: &str, dim: usize) -> Result<Box<dyn Problem<T>>> {
    name.parse::<ProblemKind>()?.build(dim)
}

pub(crate) fn check_count(count: usize) -> Result<()> {
    if count < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: count,
        });
    }
    Ok(())
}
