//! Experiment harness for the cone-penalized solvers: runs the
//! (algorithm × problem × dimension × seed) matrix, writes per-run and
//! summary CSVs, and emits plot data.

pub mod config;
pub mod error;
pub mod matrix;
pub mod plots;
pub mod record;
pub mod seeds;
pub mod summary;

pub use config::ExperimentConfig;
pub use error::{HarnessError, Result};
pub use matrix::{run_matrix, run_matrix_with, run_task, Task};
pub use plots::{emit_plot_data, PlotFiles};
pub use record::{load_all, MemberRow, RunRecord};
pub use summary::{summarize, write_summary, Stats, SummaryRow};
