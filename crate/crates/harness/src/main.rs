use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cone_dwu_harness::{
    emit_plot_data, load_all, run_matrix, summarize, summary::pivot, write_summary,
    ExperimentConfig, Result, SummaryRow,
};

#[derive(Parser)]
#[command(
    name = "cone-dwu",
    version,
    about = "Cone-penalized DWU and NSGA-II experiment runner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the experiment matrix and write per-run files and the summary.
    Run(Settings),
    /// Fold the per-run CSVs under the output directory into summary.csv.
    Summarize(Settings),
    /// Write objective scatter and dispersion tables for every stored run.
    PlotData(Settings),
}

#[derive(Args)]
struct Settings {
    /// Flat `key = value` file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated subset of c-dwu, c-nsgaii.
    #[arg(long)]
    algorithms: Option<String>,
    /// Comma-separated subset of dtlz2, wfg4, wfg9.
    #[arg(long)]
    problems: Option<String>,
    #[arg(long)]
    dims: Option<String>,
    #[arg(long)]
    runs: Option<String>,
    #[arg(long)]
    pop: Option<String>,
    #[arg(long)]
    evals: Option<String>,
    #[arg(long)]
    theta: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    /// Cone axis, e.g. `1,1`.
    #[arg(long)]
    axis: Option<String>,
    /// Base seed; run i uses seed + i.
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Measure uniformity on decision variables mapped to the unit box.
    #[arg(long)]
    normalize_uniformity: bool,
    #[arg(long)]
    reference_count: Option<String>,
    #[arg(long)]
    plot_reference_count: Option<String>,
    #[arg(long)]
    wfg_position: Option<String>,
}

impl Settings {
    fn resolve(&self) -> Result<ExperimentConfig> {
        let mut cfg = ExperimentConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let mut flags = BTreeMap::new();
        let pairs = [
            ("algorithms", &self.algorithms),
            ("problems", &self.problems),
            ("dims", &self.dims),
            ("runs", &self.runs),
            ("pop", &self.pop),
            ("evals", &self.evals),
            ("theta", &self.theta),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("axis", &self.axis),
            ("seed", &self.seed),
            ("reference-count", &self.reference_count),
            ("plot-reference-count", &self.plot_reference_count),
            ("wfg-position", &self.wfg_position),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                flags.insert(key.to_string(), v.clone());
            }
        }
        if let Some(out) = &self.out {
            flags.insert("out".into(), out.display().to_string());
        }
        if self.normalize_uniformity {
            flags.insert("normalize-uniformity".into(), "true".into());
        }
        cfg.apply_overrides(&flags)?;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn print_tables(rows: &[SummaryRow]) {
    println!("{}", pivot(rows, "mean IGD (std)", |r| r.igd));
    println!("{}", pivot(rows, "mean uniformity (std)", |r| r.uniformity));
    println!(
        "{}",
        pivot(rows, "mean ROI membership (std)", |r| r.roi_membership_rate)
    );
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(s) => {
            let cfg = s.resolve()?;
            eprintln!(
                "running {} runs into {}",
                cfg.cell_runs(),
                cfg.out_dir.display()
            );
            let records = run_matrix(&cfg)?;
            let rows = summarize(&records)?;
            write_summary(&cfg.out_dir, &rows)?;
            print_tables(&rows);
        }
        Command::Summarize(s) => {
            let cfg = s.resolve()?;
            let rows = summarize(&load_all(&cfg.out_dir)?)?;
            write_summary(&cfg.out_dir, &rows)?;
            print_tables(&rows);
        }
        Command::PlotData(s) => {
            let cfg = s.resolve()?;
            let records = load_all(&cfg.out_dir)?;
            let mut written = 0;
            for r in records.iter().filter(|r| {
                cfg.algorithms.contains(&r.algorithm)
                    && cfg.problems.contains(&r.problem)
                    && cfg.dimensions.contains(&r.dim)
            }) {
                emit_plot_data(
                    r,
                    &cfg.out_dir,
                    cfg.plot_reference_count,
                    cfg.reference_count,
                )?;
                written += 1;
            }
            eprintln!(
                "wrote plot data for {written} runs to {}",
                cfg.out_dir.join("plots").display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
