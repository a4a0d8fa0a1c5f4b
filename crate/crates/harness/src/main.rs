use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use trajopt::{emit_plot_data, parse_seeds, read_summary, report_table, run_experiment, ExperimentSpec, ScenarioRef};
use trajopt_core::{builtin_scenario, save_scenario, Algorithm, Case};

#[derive(Parser)]
#[command(name = "trajopt", version, about = "UAV trajectory optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every scenario × algorithm × seed combination.
    Run {
        /// Builtin case (`ambient`, `tangle:7`, ...) or scenario file; repeatable.
        #[arg(long = "scenario", required = true)]
        scenarios: Vec<ScenarioRef>,
        /// Defaults to all algorithms.
        #[arg(long = "algorithm")]
        algorithms: Vec<Algorithm>,
        /// Ranges and lists, e.g. `1-30` or `1,4,9`.
        #[arg(long, default_value = "1-30")]
        seeds: String,
        #[arg(long, default_value_t = 100)]
        population: usize,
        #[arg(long, default_value_t = 100)]
        iterations: usize,
        #[arg(long, default_value_t = trajopt_core::objective::DEFAULT_PENALTY_WEIGHT)]
        penalty_weight: f64,
        #[arg(long)]
        out: PathBuf,
        /// 0 uses one worker per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Print the ranking table and write plot data for an experiment directory.
    Report { dir: PathBuf },
    /// Write builtin scenarios as text files.
    Scenario {
        /// Defaults to every case.
        #[arg(long = "case")]
        cases: Vec<Case>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn report(dir: &std::path::Path) -> Result<()> {
    let rows = read_summary(&dir.join("summary.csv")).context("report: reading summary")?;
    print!("{}", report_table(&rows));
    let files = emit_plot_data(dir).context("report: writing plot data")?;
    eprintln!("wrote {} curve and {} overlay files to {}", files.curves.len(), files.overlays.len(), dir.join("plots").display());
    Ok(())
}

fn main_inner(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { scenarios, algorithms, seeds, population, iterations, penalty_weight, out, workers } => {
            let spec = ExperimentSpec {
                scenarios,
                algorithms: if algorithms.is_empty() { Algorithm::ALL.to_vec() } else { algorithms },
                seeds: parse_seeds(&seeds).context("run: parsing seeds")?,
                population,
                iterations,
                penalty_weight,
                output_dir: out.clone(),
                workers,
            };
            let outcome = run_experiment(&spec).context("run")?;
            for f in &outcome.failures {
                eprintln!("run failed: {} {} seed {}: {}", f.scenario, f.algorithm, f.seed, f.message);
            }
            eprintln!("{} runs completed, {} failed", outcome.records.len(), outcome.failures.len());
            if outcome.records.is_empty() {
                anyhow::bail!("run: every run failed");
            }
            report(&out)
        }
        Command::Report { dir } => report(&dir),
        Command::Scenario { cases, seed, out } => {
            let cases = if cases.is_empty() { Case::ALL.to_vec() } else { cases };
            std::fs::create_dir_all(&out).with_context(|| format!("scenario: creating {}", out.display()))?;
            for case in cases {
                let s = builtin_scenario(case, seed).with_context(|| format!("scenario: generating {case}"))?;
                let path = out.join(format!("{}.txt", s.name()));
                save_scenario(&s, &path).with_context(|| format!("scenario: writing {}", path.display()))?;
                println!("{}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
