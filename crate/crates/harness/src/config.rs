//! Experiment configuration: defaults, flat `key = value` files and
//! command-line overrides.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use cone_dwu::{AlgorithmKind, PreferenceCone, ProblemKind};

use crate::error::{io_err, HarnessError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub algorithms: Vec<AlgorithmKind>,
    pub problems: Vec<ProblemKind>,
    pub dimensions: Vec<usize>,
    pub runs: usize,
    pub population: usize,
    pub evaluations: usize,
    pub axis: Vec<f64>,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub base_seed: u64,
    /// Measure decision distances on variables mapped to the unit box, both
    /// in the DWU selection and in the headline uniformity metric.
    pub normalize_uniformity: bool,
    /// Front samples drawn before cone filtering for the IGD reference.
    pub reference_count: usize,
    /// Reference rows written per objective-space plot file.
    pub plot_reference_count: usize,
    /// WFG position-related parameter count.
    pub wfg_position: usize,
    pub out_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: AlgorithmKind::ALL.to_vec(),
            problems: ProblemKind::ALL.to_vec(),
            dimensions: vec![5, 7, 9],
            runs: 10,
            population: 100,
            evaluations: 100_000,
            axis: vec![1.0, 1.0],
            theta: 0.3,
            alpha: 0.3,
            beta: 1.0,
            base_seed: 1,
            normalize_uniformity: false,
            reference_count: 10_000,
            plot_reference_count: 200,
            wfg_position: 1,
            out_dir: PathBuf::from("results"),
        }
    }
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    value
        .split([',', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|e| HarnessError::Config(format!("{key}: cannot parse `{s}`: {e}")))
        })
        .collect()
}

fn parse_one<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .trim()
        .parse::<T>()
        .map_err(|e| HarnessError::Config(format!("{key}: cannot parse `{value}`: {e}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Ok(true),
        "0" | "false" | "no" | "off" => Ok(false),
        other => Err(HarnessError::Config(format!(
            "{key}: expected a boolean, got `{other}`"
        ))),
    }
}

impl ExperimentConfig {
    /// Applies one setting. Keys match the long CLI flags without dashes.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        match key.as_str() {
            "algorithms" => self.algorithms = parse_list(&key, value)?,
            "problems" => self.problems = parse_list(&key, value)?,
            "dims" | "dimensions" => self.dimensions = parse_list(&key, value)?,
            "runs" => self.runs = parse_one(&key, value)?,
            "pop" | "population" => self.population = parse_one(&key, value)?,
            "evals" | "evaluations" => self.evaluations = parse_one(&key, value)?,
            "axis" => self.axis = parse_list(&key, value)?,
            "theta" => self.theta = parse_one(&key, value)?,
            "alpha" => self.alpha = parse_one(&key, value)?,
            "beta" => self.beta = parse_one(&key, value)?,
            "seed" => self.base_seed = parse_one(&key, value)?,
            "normalize-uniformity" => self.normalize_uniformity = parse_bool(&key, value)?,
            "reference-count" => self.reference_count = parse_one(&key, value)?,
            "plot-reference-count" => self.plot_reference_count = parse_one(&key, value)?,
            "wfg-position" => self.wfg_position = parse_one(&key, value)?,
            "out" => self.out_dir = PathBuf::from(value.trim()),
            other => return Err(HarnessError::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Parses `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                HarnessError::Config(format!("line {}: expected key = value", n + 1))
            })?;
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        self.apply_text(&text)
    }

    /// Applies overrides in order; later entries win.
    pub fn apply_overrides(&mut self, overrides: &BTreeMap<String, String>) -> Result<()> {
        for (k, v) in overrides {
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn cone(&self) -> Result<PreferenceCone> {
        Ok(PreferenceCone::new(
            self.axis.clone(),
            self.theta,
            self.alpha,
            self.beta,
        )?)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(HarnessError::Config(m.to_string()));
        if self.algorithms.is_empty() || self.problems.is_empty() || self.dimensions.is_empty() {
            return fail("algorithms, problems and dims must be nonempty");
        }
        if self.runs < 1 {
            return fail("runs must be at least 1");
        }
        if self.dimensions.iter().any(|&d| d < 3) {
            return fail("dimensions must be at least 3");
        }
        if self.wfg_position < 1 || self.dimensions.iter().any(|&d| d <= self.wfg_position) {
            return fail("wfg-position must be at least 1 and below every dimension");
        }
        if self.population < 2 || !self.population.is_multiple_of(2) {
            return fail("pop must be even and at least 2");
        }
        if self.evaluations < self.population {
            return fail("evals must be at least pop");
        }
        if self.axis.len() != 2 {
            return fail("axis must have two components");
        }
        if self.reference_count < 2 || self.plot_reference_count < 2 {
            return fail("reference counts must be at least 2");
        }
        self.cone()?;
        Ok(())
    }

    /// Number of runs in the matrix.
    pub fn cell_runs(&self) -> usize {
        self.algorithms.len() * self.problems.len() * self.dimensions.len() * self.runs
    }
}
