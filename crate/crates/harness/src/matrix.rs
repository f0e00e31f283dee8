//! Executes the experiment matrix.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;

use cone_dwu::cone::angular_distance;
use cone_dwu::metrics::{igd, roi_membership_rate, roi_reference_set};
use cone_dwu::{
    dwu::uniformity, AlgorithmConfig, AlgorithmKind, MetricReport, PreferenceCone, Problem,
    ProblemKind, ReferenceSet, RunOutcome, VariationConfig,
};
use rayon::prelude::*;

use crate::config::ExperimentConfig;
use crate::error::{io_err, Result};
use crate::record::{MemberRow, RunRecord};
use crate::seeds::rng_seed;

/// One run of the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Task {
    pub algorithm: AlgorithmKind,
    pub problem: ProblemKind,
    pub dim: usize,
    pub run_index: usize,
}

/// Tasks in canonical order: algorithm, problem, dimension, run.
pub fn tasks(cfg: &ExperimentConfig) -> Vec<Task> {
    let mut out = Vec::with_capacity(cfg.cell_runs());
    for &algorithm in &cfg.algorithms {
        for &problem in &cfg.problems {
            for &dim in &cfg.dimensions {
                for run_index in 0..cfg.runs {
                    out.push(Task {
                        algorithm,
                        problem,
                        dim,
                        run_index,
                    });
                }
            }
        }
    }
    out
}

/// Fails unless files can be created in `dir`.
pub fn ensure_writable(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let probe = dir.join(".write-probe");
    fs::write(&probe, b"").map_err(io_err(&probe))?;
    fs::remove_file(&probe).map_err(io_err(&probe))?;
    Ok(())
}

fn solver_config(cfg: &ExperimentConfig, dim: usize, seed: u64) -> Result<AlgorithmConfig> {
    Ok(AlgorithmConfig {
        population_size: cfg.population,
        max_evaluations: cfg.evaluations,
        cone: cfg.cone()?,
        variation: VariationConfig::standard(dim),
        seed,
    })
}

/// Metrics of the reported set of `outcome`. Uniformity is 0 when fewer
/// than two members are reported.
pub fn evaluate_outcome(
    outcome: &RunOutcome,
    problem: &dyn Problem<f64>,
    cone: &PreferenceCone,
    reference: &ReferenceSet,
) -> Result<MetricReport> {
    let objectives: Vec<&[f64]> = outcome
        .reported_members()
        .map(|m| m.objectives.as_ref())
        .collect();
    let decisions: Vec<&[f64]> = outcome
        .reported_members()
        .map(|m| m.decision.as_ref())
        .collect();
    let normalized: Vec<Vec<f64>> = decisions
        .iter()
        .map(|d| problem.bounds().normalize(d))
        .collect();
    Ok(MetricReport {
        igd: igd(&reference.points, &objectives)?,
        uniformity: spread(&decisions)?,
        uniformity_normalized: spread(&normalized)?,
        roi_membership_rate: roi_membership_rate(&objectives, cone)?,
        reference_size: reference.len(),
    })
}

fn spread<V: AsRef<[f64]>>(points: &[V]) -> Result<f64> {
    if points.len() < 2 {
        Ok(0.0)
    } else {
        Ok(uniformity(points)?)
    }
}

/// Runs one task and returns its record without touching the disk.
pub fn run_task(cfg: &ExperimentConfig, task: Task, reference: &ReferenceSet) -> Result<RunRecord> {
    let problem = task
        .problem
        .build_with_position::<f64>(task.dim, cfg.wfg_position)?;
    let seed = cfg.base_seed.wrapping_add(task.run_index as u64);
    let solver_seed = rng_seed(task.algorithm, task.problem, task.dim, seed);
    let solver = solver_config(cfg, task.dim, solver_seed)?;
    let start = Instant::now();
    let outcome = task.algorithm.run(problem.as_ref(), &solver)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    let metrics = evaluate_outcome(&outcome, problem.as_ref(), &solver.cone, reference)?;
    let mut reported = vec![false; outcome.population.len()];
    for &i in &outcome.reported {
        reported[i] = true;
    }
    let members = outcome
        .population
        .members
        .iter()
        .zip(reported)
        .map(|(m, reported)| {
            let phi = angular_distance(&m.objectives, &solver.cone)?;
            Ok(MemberRow {
                reported,
                front_level: m.front_level,
                penalized_front_level: m.penalized_front_level,
                in_cone: solver.cone.contains_angle(phi),
                phi,
                objectives: m.objectives.to_vec(),
                decision: m.decision.to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RunRecord {
        algorithm: task.algorithm,
        problem: task.problem,
        dim: task.dim,
        seed,
        rng_seed: solver_seed,
        population_size: cfg.population,
        budget: cfg.evaluations,
        evaluations: outcome.evaluations(),
        generations: outcome.generations(),
        initial_only: outcome.initial_only,
        axis: cfg.axis.clone(),
        theta: cfg.theta,
        alpha: cfg.alpha,
        beta: cfg.beta,
        wfg_position: cfg.wfg_position,
        normalized: cfg.normalize_uniformity,
        metrics,
        members,
        wall_seconds,
    })
}

/// ROI reference sets for every (problem, dimension) in the config.
pub fn reference_sets(
    cfg: &ExperimentConfig,
) -> Result<BTreeMap<(ProblemKind, usize), ReferenceSet>> {
    let cone = cfg.cone()?;
    let mut out = BTreeMap::new();
    for &problem in &cfg.problems {
        for &dim in &cfg.dimensions {
            let p = problem.build_with_position::<f64>(dim, cfg.wfg_position)?;
            out.insert(
                (problem, dim),
                roi_reference_set(p.as_ref(), &cone, cfg.reference_count)?,
            );
        }
    }
    Ok(out)
}

/// Runs every task of the matrix, in parallel across tasks, writing the
/// per-run files as each finishes. Records come back in canonical order.
pub fn run_matrix(cfg: &ExperimentConfig) -> Result<Vec<RunRecord>> {
    run_matrix_with(cfg, true)
}

/// [`run_matrix`] with the parallelism switchable, for comparing the two.
pub fn run_matrix_with(cfg: &ExperimentConfig, parallel: bool) -> Result<Vec<RunRecord>> {
    cfg.validate()?;
    ensure_writable(&cfg.out_dir)?;
    let references = reference_sets(cfg)?;
    let work = |task: &Task| -> Result<RunRecord> {
        let record = run_task(cfg, *task, &references[&(task.problem, task.dim)])?;
        record.write(&cfg.out_dir)?;
        Ok(record)
    };
    let all = tasks(cfg);
    let records: Vec<Result<RunRecord>> = if parallel {
        all.par_iter().map(work).collect()
    } else {
        all.iter().map(work).collect()
    };
    let records = records.into_iter().collect::<Result<Vec<_>>>()?;
    write_timings(&cfg.out_dir, &records)?;
    Ok(records)
}

/// Wall-clock times live apart from the per-run files so those stay
/// reproducible byte for byte.
fn write_timings(out_dir: &Path, records: &[RunRecord]) -> Result<()> {
    let mut text = String::from("# cone-dwu timings v1\nrun_id,wall_seconds\n");
    for r in records {
        text.push_str(&format!("{},{}\n", r.run_id(), r.wall_seconds));
    }
    let path = out_dir.join("timings.csv");
    fs::write(&path, text).map_err(io_err(&path))
}
