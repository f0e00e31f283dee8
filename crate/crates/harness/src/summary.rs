//! Per-cell statistics folded from run records.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cone_dwu::{AlgorithmKind, ProblemKind};

use crate::error::{csv_err, io_err, HarnessError, Result};
use crate::record::{finish, writer, RunRecord};

pub const SUMMARY_SCHEMA: &str = "# cone-dwu summary v1";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub mean: f64,
    /// Sample standard deviation; 0 for a single value.
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn of(values: &[f64]) -> Stats {
        let n = values.len() as f64;
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        // offsets from the minimum keep the mean of equal values exact
        let mean = min + values.iter().map(|v| v - min).sum::<f64>() / n;
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Stats {
            mean,
            std,
            min,
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: AlgorithmKind,
    pub problem: ProblemKind,
    pub dim: usize,
    pub runs: usize,
    pub igd: Stats,
    pub uniformity: Stats,
    pub roi_membership_rate: Stats,
}

/// Groups records by (algorithm, problem, D), sorted canonically.
pub fn summarize(records: &[RunRecord]) -> Result<Vec<SummaryRow>> {
    if records.is_empty() {
        return Err(HarnessError::Config("no run records to summarize".into()));
    }
    let mut cells: BTreeMap<(AlgorithmKind, ProblemKind, usize), Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        cells
            .entry((r.algorithm, r.problem, r.dim))
            .or_default()
            .push(r);
    }
    Ok(cells
        .into_iter()
        .map(|((algorithm, problem, dim), mut rs)| {
            rs.sort_by_key(|r| r.seed);
            let col =
                |f: fn(&RunRecord) -> f64| Stats::of(&rs.iter().map(|r| f(r)).collect::<Vec<_>>());
            SummaryRow {
                algorithm,
                problem,
                dim,
                runs: rs.len(),
                igd: col(|r| r.metrics.igd),
                uniformity: col(RunRecord::headline_uniformity),
                roi_membership_rate: col(|r| r.metrics.roi_membership_rate),
            }
        })
        .collect())
}

pub fn summary_csv(rows: &[SummaryRow]) -> Result<Vec<u8>> {
    let mut w = writer(SUMMARY_SCHEMA);
    let mut header = vec![
        "algorithm".to_string(),
        "problem".into(),
        "dim".into(),
        "runs".into(),
    ];
    for metric in ["igd", "uniformity", "roi_membership_rate"] {
        for stat in ["mean", "std", "min", "max"] {
            header.push(format!("{metric}_{stat}"));
        }
    }
    w.write_record(&header).map_err(csv_err("<summary>"))?;
    for r in rows {
        let mut row = vec![
            r.algorithm.to_string(),
            r.problem.to_string(),
            r.dim.to_string(),
            r.runs.to_string(),
        ];
        for s in [r.igd, r.uniformity, r.roi_membership_rate] {
            row.extend([s.mean, s.std, s.min, s.max].iter().map(f64::to_string));
        }
        w.write_record(&row).map_err(csv_err("<summary>"))?;
    }
    finish(w)
}

pub fn write_summary(out_dir: &Path, rows: &[SummaryRow]) -> Result<()> {
    let path = out_dir.join("summary.csv");
    fs::write(&path, summary_csv(rows)?).map_err(io_err(&path))
}

/// Mean of one metric laid out with a row per (problem, D) and a column
/// per algorithm.
pub fn pivot(rows: &[SummaryRow], title: &str, pick: fn(&SummaryRow) -> Stats) -> String {
    let mut algorithms: Vec<AlgorithmKind> = rows.iter().map(|r| r.algorithm).collect();
    algorithms.sort();
    algorithms.dedup();
    let mut keys: Vec<(ProblemKind, usize)> = rows.iter().map(|r| (r.problem, r.dim)).collect();
    keys.sort();
    keys.dedup();
    let mut out = format!("{title}\n{:<8}{:>4}", "problem", "D");
    for a in &algorithms {
        let _ = write!(out, "{:>24}", a.as_str());
    }
    out.push('\n');
    for (p, d) in keys {
        let _ = write!(out, "{:<8}{:>4}", p.as_str(), d);
        for a in &algorithms {
            match rows
                .iter()
                .find(|r| r.algorithm == *a && r.problem == p && r.dim == d)
            {
                Some(r) => {
                    let s = pick(r);
                    let _ = write!(out, "{:>24}", format!("{:.4e} ({:.1e})", s.mean, s.std));
                }
                None => {
                    let _ = write!(out, "{:>24}", "-");
                }
            }
        }
        out.push('\n');
    }
    out
}
