//! Run records and their CSV files.

use std::fs;
use std::path::{Path, PathBuf};

use cone_dwu::{AlgorithmKind, MetricReport, ProblemKind};

use crate::error::{csv_err, io_err, HarnessError, Result};
use crate::seeds::cell_name;

pub const RUN_SCHEMA: &str = "# cone-dwu run v1";
pub const POP_SCHEMA: &str = "# cone-dwu population v1";

/// One member of a final population.
#[derive(Debug, Clone, PartialEq)]
pub struct MemberRow {
    pub reported: bool,
    pub front_level: usize,
    pub penalized_front_level: usize,
    pub in_cone: bool,
    pub phi: f64,
    pub objectives: Vec<f64>,
    pub decision: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: AlgorithmKind,
    pub problem: ProblemKind,
    pub dim: usize,
    /// Base seed plus run index; names the files.
    pub seed: u64,
    /// Seed actually handed to the solver.
    pub rng_seed: u64,
    pub population_size: usize,
    pub budget: usize,
    pub evaluations: usize,
    pub generations: usize,
    pub initial_only: bool,
    pub axis: Vec<f64>,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub wfg_position: usize,
    pub normalized: bool,
    pub metrics: MetricReport,
    pub members: Vec<MemberRow>,
    /// Not persisted in the per-run CSV; NaN for records loaded from disk.
    pub wall_seconds: f64,
}

impl RunRecord {
    pub fn cell(&self) -> String {
        cell_name(self.algorithm, self.problem, self.dim)
    }

    pub fn run_id(&self) -> String {
        format!("{}_{}", self.cell(), self.seed)
    }

    pub fn reported(&self) -> impl Iterator<Item = (usize, &MemberRow)> {
        self.members.iter().enumerate().filter(|(_, m)| m.reported)
    }

    pub fn reported_count(&self) -> usize {
        self.reported().count()
    }

    /// Uniformity value used in summaries.
    pub fn headline_uniformity(&self) -> f64 {
        if self.normalized {
            self.metrics.uniformity_normalized
        } else {
            self.metrics.uniformity
        }
    }

    pub fn metrics_path(&self, out_dir: &Path) -> PathBuf {
        out_dir
            .join("runs")
            .join(self.cell())
            .join(format!("{}.csv", self.seed))
    }

    pub fn population_path(&self, out_dir: &Path) -> PathBuf {
        out_dir
            .join("runs")
            .join(self.cell())
            .join(format!("{}_pop.csv", self.seed))
    }

    pub fn metrics_csv(&self) -> Result<Vec<u8>> {
        let mut w = writer(RUN_SCHEMA);
        let axis = join(&self.axis, ";");
        let fields: Vec<(&str, String)> = vec![
            ("algorithm", self.algorithm.to_string()),
            ("problem", self.problem.to_string()),
            ("dim", self.dim.to_string()),
            ("seed", self.seed.to_string()),
            ("rng_seed", self.rng_seed.to_string()),
            ("population", self.population_size.to_string()),
            ("budget", self.budget.to_string()),
            ("evaluations", self.evaluations.to_string()),
            ("generations", self.generations.to_string()),
            ("initial_only", self.initial_only.to_string()),
            ("axis", axis),
            ("theta", self.theta.to_string()),
            ("alpha", self.alpha.to_string()),
            ("beta", self.beta.to_string()),
            ("wfg_position", self.wfg_position.to_string()),
            ("normalized", self.normalized.to_string()),
            ("reported", self.reported_count().to_string()),
            ("reference_size", self.metrics.reference_size.to_string()),
            ("igd", self.metrics.igd.to_string()),
            ("uniformity", self.metrics.uniformity.to_string()),
            (
                "uniformity_normalized",
                self.metrics.uniformity_normalized.to_string(),
            ),
            (
                "roi_membership_rate",
                self.metrics.roi_membership_rate.to_string(),
            ),
        ];
        let (names, values): (Vec<_>, Vec<_>) = fields.into_iter().unzip();
        w.write_record(&names).map_err(csv_err("<run csv>"))?;
        w.write_record(&values).map_err(csv_err("<run csv>"))?;
        finish(w)
    }

    pub fn population_csv(&self) -> Result<Vec<u8>> {
        let mut w = writer(POP_SCHEMA);
        let m = self.members.first().map_or(2, |r| r.objectives.len());
        let mut header: Vec<String> = [
            "index",
            "reported",
            "front_level",
            "penalized_front_level",
            "in_cone",
            "phi",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        header.extend((1..=m).map(|i| format!("f{i}")));
        header.extend((1..=self.dim).map(|i| format!("x{i}")));
        w.write_record(&header).map_err(csv_err("<pop csv>"))?;
        for (i, r) in self.members.iter().enumerate() {
            let mut row = vec![
                i.to_string(),
                r.reported.to_string(),
                r.front_level.to_string(),
                r.penalized_front_level.to_string(),
                r.in_cone.to_string(),
                r.phi.to_string(),
            ];
            row.extend(r.objectives.iter().map(f64::to_string));
            row.extend(r.decision.iter().map(f64::to_string));
            w.write_record(&row).map_err(csv_err("<pop csv>"))?;
        }
        finish(w)
    }

    /// Writes both files below `out_dir/runs/<cell>/`.
    pub fn write(&self, out_dir: &Path) -> Result<()> {
        let metrics = self.metrics_path(out_dir);
        if let Some(dir) = metrics.parent() {
            fs::create_dir_all(dir).map_err(io_err(dir))?;
        }
        fs::write(&metrics, self.metrics_csv()?).map_err(io_err(&metrics))?;
        let pop = self.population_path(out_dir);
        fs::write(&pop, self.population_csv()?).map_err(io_err(&pop))?;
        Ok(())
    }

    /// Reads a record back from its metrics file and the sibling population
    /// file.
    pub fn load(metrics_path: &Path) -> Result<Self> {
        let rows = read_rows(metrics_path)?;
        let malformed = |message: String| HarnessError::Malformed {
            path: metrics_path.to_path_buf(),
            message,
        };
        let (header, values) = match rows.as_slice() {
            [h, v] => (h, v),
            _ => return Err(malformed("expected a header and one data row".into())),
        };
        let get = |key: &str| -> Result<&str> {
            header
                .iter()
                .position(|h| h == key)
                .and_then(|i| values.get(i))
                .map(String::as_str)
                .ok_or_else(|| malformed(format!("missing column `{key}`")))
        };
        fn num<T: std::str::FromStr>(path: &Path, key: &str, s: &str) -> Result<T> {
            s.parse().map_err(|_| HarnessError::Malformed {
                path: path.to_path_buf(),
                message: format!("bad value `{s}` in column `{key}`"),
            })
        }
        let p = metrics_path;
        let axis = get("axis")?
            .split(';')
            .map(|s| num::<f64>(p, "axis", s))
            .collect::<Result<Vec<_>>>()?;
        let dim: usize = num(p, "dim", get("dim")?)?;
        let seed: u64 = num(p, "seed", get("seed")?)?;
        let stem = metrics_path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| malformed("unnamed file".into()))?;
        let pop_path = metrics_path.with_file_name(format!("{stem}_pop.csv"));
        let members = load_members(&pop_path, dim)?;
        let record = RunRecord {
            algorithm: get("algorithm")?.parse()?,
            problem: get("problem")?.parse()?,
            dim,
            seed,
            rng_seed: num(p, "rng_seed", get("rng_seed")?)?,
            population_size: num(p, "population", get("population")?)?,
            budget: num(p, "budget", get("budget")?)?,
            evaluations: num(p, "evaluations", get("evaluations")?)?,
            generations: num(p, "generations", get("generations")?)?,
            initial_only: num(p, "initial_only", get("initial_only")?)?,
            axis,
            theta: num(p, "theta", get("theta")?)?,
            alpha: num(p, "alpha", get("alpha")?)?,
            beta: num(p, "beta", get("beta")?)?,
            wfg_position: num(p, "wfg_position", get("wfg_position")?)?,
            normalized: num(p, "normalized", get("normalized")?)?,
            metrics: MetricReport {
                igd: num(p, "igd", get("igd")?)?,
                uniformity: num(p, "uniformity", get("uniformity")?)?,
                uniformity_normalized: num(
                    p,
                    "uniformity_normalized",
                    get("uniformity_normalized")?,
                )?,
                roi_membership_rate: num(p, "roi_membership_rate", get("roi_membership_rate")?)?,
                reference_size: num(p, "reference_size", get("reference_size")?)?,
            },
            members,
            wall_seconds: f64::NAN,
        };
        let reported: usize = num(p, "reported", get("reported")?)?;
        if reported != record.reported_count() {
            return Err(malformed(format!(
                "reported count {reported} disagrees with the population file"
            )));
        }
        Ok(record)
    }
}

fn load_members(path: &Path, dim: usize) -> Result<Vec<MemberRow>> {
    let rows = read_rows(path)?;
    let malformed = |message: String| HarnessError::Malformed {
        path: path.to_path_buf(),
        message,
    };
    let Some((header, body)) = rows.split_first() else {
        return Err(malformed("empty file".into()));
    };
    let m = header
        .iter()
        .filter(|h| h.starts_with('f') && h[1..].parse::<usize>().is_ok())
        .count();
    if header.len() != 6 + m + dim {
        return Err(malformed(format!(
            "expected {} columns, found {}",
            6 + m + dim,
            header.len()
        )));
    }
    let parse_f = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| malformed(format!("bad number `{s}`")))
    };
    body.iter()
        .map(|row| {
            if row.len() != header.len() {
                return Err(malformed("ragged row".into()));
            }
            let flag = |s: &str| {
                s.parse::<bool>()
                    .map_err(|_| malformed(format!("bad flag `{s}`")))
            };
            let level = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| malformed(format!("bad level `{s}`")))
            };
            Ok(MemberRow {
                reported: flag(&row[1])?,
                front_level: level(&row[2])?,
                penalized_front_level: level(&row[3])?,
                in_cone: flag(&row[4])?,
                phi: parse_f(&row[5])?,
                objectives: row[6..6 + m]
                    .iter()
                    .map(|s| parse_f(s))
                    .collect::<Result<_>>()?,
                decision: row[6 + m..]
                    .iter()
                    .map(|s| parse_f(s))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

pub(crate) fn writer(schema: &str) -> csv::Writer<Vec<u8>> {
    let mut buf = Vec::new();
    buf.extend_from_slice(schema.as_bytes());
    buf.push(b'\n');
    csv::Writer::from_writer(buf)
}

pub(crate) fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>> {
    w.into_inner().map_err(|e| HarnessError::Io {
        path: PathBuf::from("<buffer>"),
        source: e.into_error(),
    })
}

/// All records of a CSV file, skipping `#` comment lines.
pub fn read_rows(path: &Path) -> Result<Vec<Vec<String>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .from_path(path)
        .map_err(csv_err(path))?;
    reader
        .records()
        .map(|r| {
            r.map(|rec| rec.iter().map(str::to_string).collect())
                .map_err(csv_err(path))
        })
        .collect()
}

pub(crate) fn join(values: &[f64], sep: &str) -> String {
    values
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Metric files under `out_dir/runs`, sorted by path.
pub fn metric_files(out_dir: &Path) -> Result<Vec<PathBuf>> {
    let runs = out_dir.join("runs");
    let mut files = Vec::new();
    let cells = fs::read_dir(&runs).map_err(io_err(&runs))?;
    for cell in cells {
        let cell = cell.map_err(io_err(&runs))?.path();
        if !cell.is_dir() {
            continue;
        }
        for entry in fs::read_dir(&cell).map_err(io_err(&cell))? {
            let path = entry.map_err(io_err(&cell))?.path();
            let is_metrics = path.extension().is_some_and(|e| e == "csv")
                && path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .is_some_and(|s| !s.ends_with("_pop"));
            if is_metrics {
                files.push(path);
            }
        }
    }
    files.sort();
    Ok(files)
}

/// Loads every record under `out_dir/runs`.
pub fn load_all(out_dir: &Path) -> Result<Vec<RunRecord>> {
    metric_files(out_dir)?
        .iter()
        .map(|p| RunRecord::load(p))
        .collect()
}
