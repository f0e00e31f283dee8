//! Plot-data files: an objective-space scatter (solutions, ROI reference
//! front, cone boundary rays) and the decision-space sector table.

use std::fs;
use std::path::{Path, PathBuf};

use cone_dwu::dispersion::dispersion_table;
use cone_dwu::metrics::roi_reference_set;
use cone_dwu::{PreferenceCone, Problem};

use crate::error::{csv_err, io_err, HarnessError, Result};
use crate::record::{finish, writer, RunRecord};

pub const OBJECTIVES_SCHEMA: &str = "# cone-dwu objectives v1";
pub const DISPERSION_SCHEMA: &str = "# cone-dwu dispersion v1";

/// Points written along each cone boundary ray.
pub const RAY_POINTS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotFiles {
    pub objectives: PathBuf,
    pub dispersion: PathBuf,
}

/// `count` ROI front points, evenly thinned from a dense cone-filtered
/// sample.
pub fn roi_front_rows(
    problem: &dyn Problem<f64>,
    cone: &PreferenceCone,
    count: usize,
    sampled: usize,
) -> Result<Vec<Vec<f64>>> {
    let mut draw = sampled.max(count);
    loop {
        let set = roi_reference_set(problem, cone, draw)?;
        if set.len() >= count {
            let n = set.len();
            return Ok((0..count)
                .map(|i| {
                    let j = if count == 1 {
                        0
                    } else {
                        (i * (n - 1) + (count - 1) / 2) / (count - 1)
                    };
                    set.points[j].to_vec()
                })
                .collect());
        }
        if draw > 1 << 24 {
            return Err(HarnessError::Config(format!(
                "cone region too narrow for {count} reference rows"
            )));
        }
        draw *= 2;
    }
}

/// Boundary rays at `±θ` around the (two-dimensional) cone axis, each
/// sampled at `RAY_POINTS` radii up to `reach`.
pub fn cone_ray_rows(cone: &PreferenceCone, reach: f64) -> Result<Vec<Vec<f64>>> {
    let axis = cone.axis();
    if axis.len() != 2 {
        return Err(HarnessError::Config(
            "cone rays need a two-objective axis".into(),
        ));
    }
    let base = axis[1].atan2(axis[0]);
    let mut rows = Vec::with_capacity(2 * RAY_POINTS);
    for angle in [base + cone.theta(), base - cone.theta()] {
        for s in 1..=RAY_POINTS {
            let r = reach * s as f64 / RAY_POINTS as f64;
            rows.push(vec![r * angle.cos(), r * angle.sin()]);
        }
    }
    Ok(rows)
}

/// Writes both plot files of `record` into `out_dir/plots`.
pub fn emit_plot_data(
    record: &RunRecord,
    out_dir: &Path,
    reference_rows: usize,
    sampled: usize,
) -> Result<PlotFiles> {
    let problem = record
        .problem
        .build_with_position::<f64>(record.dim, record.wfg_position)?;
    let cone = PreferenceCone::new(record.axis.clone(), record.theta, record.alpha, record.beta)?;
    let reference = roi_front_rows(problem.as_ref(), &cone, reference_rows, sampled)?;
    let reach = record
        .members
        .iter()
        .map(|m| &m.objectives)
        .chain(&reference)
        .map(|p| p.iter().map(|v| v * v).sum::<f64>().sqrt())
        .fold(0.0, f64::max)
        * 1.1;
    let rays = cone_ray_rows(&cone, reach.max(1.0))?;

    let dir = out_dir.join("plots");
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;
    let files = PlotFiles {
        objectives: dir.join(format!("{}_objectives.csv", record.run_id())),
        dispersion: dir.join(format!("{}_dispersion.csv", record.run_id())),
    };

    let mut w = writer(OBJECTIVES_SCHEMA);
    let tag = "<objectives csv>";
    w.write_record(["kind", "index", "reported", "f1", "f2"])
        .map_err(csv_err(tag))?;
    for (i, m) in record.members.iter().enumerate() {
        write_point(
            &mut w,
            "solution",
            i,
            &m.reported.to_string(),
            &m.objectives,
        )?;
    }
    for (i, p) in reference.iter().enumerate() {
        write_point(&mut w, "reference", i, "", p)?;
    }
    for (i, p) in rays.iter().enumerate() {
        let kind = if i < RAY_POINTS {
            "cone_upper"
        } else {
            "cone_lower"
        };
        write_point(&mut w, kind, i % RAY_POINTS, "", p)?;
    }
    fs::write(&files.objectives, finish(w)?).map_err(io_err(&files.objectives))?;

    let reported: Vec<(usize, &Vec<f64>)> =
        record.reported().map(|(i, m)| (i, &m.decision)).collect();
    let points: Vec<&[f64]> = reported.iter().map(|(_, d)| d.as_slice()).collect();
    let mut w = writer(DISPERSION_SCHEMA);
    let tag = "<dispersion csv>";
    let mut header: Vec<String> = ["run_id", "index", "sector", "sigma", "rho"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    header.extend((1..=record.dim).map(|i| format!("x{i}")));
    w.write_record(&header).map_err(csv_err(tag))?;
    if !points.is_empty() {
        for (rec, (index, decision)) in dispersion_table(&points)?.iter().zip(&reported) {
            let mut row = vec![
                record.run_id(),
                index.to_string(),
                rec.sector.to_string(),
                rec.sigma.to_string(),
                rec.rho.to_string(),
            ];
            row.extend(decision.iter().map(f64::to_string));
            w.write_record(&row).map_err(csv_err(tag))?;
        }
    }
    fs::write(&files.dispersion, finish(w)?).map_err(io_err(&files.dispersion))?;
    Ok(files)
}

fn write_point(
    w: &mut csv::Writer<Vec<u8>>,
    kind: &str,
    index: usize,
    reported: &str,
    p: &[f64],
) -> Result<()> {
    let mut row = vec![kind.to_string(), index.to_string(), reported.to_string()];
    row.extend(p.iter().map(f64::to_string));
    w.write_record(&row).map_err(csv_err("<objectives csv>"))
}
