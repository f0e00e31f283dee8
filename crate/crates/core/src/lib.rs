//! Multi-objective evolutionary solvers that concentrate solutions inside a
//! preference cone in objective space while spreading them out in decision
//! space.
//!
//! The numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix it to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // negated comparisons reject NaN on purpose

pub mod algorithms;
pub mod cone;
pub mod dispersion;
pub mod domain;
pub mod dominance;
pub mod dwu;
pub mod error;
pub mod metrics;
pub mod problems;
pub mod scalar;
pub mod variation;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use algorithms::{AlgorithmKind, RunOutcome as GenericRunOutcome};
pub use problems::{problem_by_name, Problem, ProblemKind};

pub type DecisionVector = domain::DecisionVector<f64>;
pub type ObjectiveVector = domain::ObjectiveVector<f64>;
pub type Individual = domain::Individual<f64>;
pub type Population = domain::Population<f64>;
pub type Bounds = domain::Bounds<f64>;
pub type PreferenceCone = cone::PreferenceCone<f64>;
pub type VariationConfig = variation::VariationConfig<f64>;
pub type AlgorithmConfig = algorithms::AlgorithmConfig<f64>;
pub type RunOutcome = algorithms::RunOutcome<f64>;
pub type ReferenceSet = metrics::ReferenceSet<f64>;
pub type MetricReport = metrics::MetricReport<f64>;
pub type SectorRecord = dispersion::SectorRecord<f64>;
