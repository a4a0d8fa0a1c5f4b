//! Runs (scenario × algorithm × seed) grids and writes per-run artifacts
//! plus an aggregated summary.
//!
//! Output layout under the experiment directory:
//!
//! ```text
//! scenarios/<scenario>.txt                        resolved scenario files
//! runs/<scenario>/<algorithm>/seed_<n>.csv        convergence + diversity
//! runs/<scenario>/<algorithm>/seed_<n>_trajectory.csv
//! runs.csv                                        one row per run (timing included)
//! failures.csv                                    runs that errored, if any
//! summary.csv                                     one row per (scenario, algorithm)
//! ranking.txt                                     formatted summary table
//! metadata.txt                                    hyper-parameters and budget
//! ```

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;
use trajopt_core::diagnostics::exploration_exploitation;
use trajopt_core::{builtin_scenario, load_scenario, optimize, Algorithm, Case, PathObjective, RunResult, Scenario};

use crate::report::report_table;
use crate::stats::Summary;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("scenario `{reference}`: {source}")]
    Scenario {
        reference: String,
        #[source]
        source: trajopt_core::ScenarioError,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("missing input {0}")]
    Missing(PathBuf),
    #[error("invalid experiment: {0}")]
    InvalidSpec(String),
    #[error("invalid seed list `{0}`")]
    Seeds(String),
}

pub(crate) fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io { path: path.to_path_buf(), source }
}

pub(crate) fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> HarnessError + '_ {
    move |source| HarnessError::Csv { path: path.to_path_buf(), source }
}

/// A builtin case (optionally `case:seed`, default seed 1) or a scenario file.
#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioRef {
    Builtin { case: Case, seed: u64 },
    File(PathBuf),
}

impl ScenarioRef {
    pub fn resolve(&self) -> Result<Scenario, HarnessError> {
        let wrap = |source| HarnessError::Scenario { reference: self.to_string(), source };
        match self {
            ScenarioRef::Builtin { case, seed } => {
                let s = builtin_scenario(*case, *seed).map_err(wrap)?;
                Ok(if *seed == 1 { s } else { s.renamed(format!("{case}_s{seed}")) })
            }
            ScenarioRef::File(path) => load_scenario(path).map_err(wrap),
        }
    }
}

impl fmt::Display for ScenarioRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioRef::Builtin { case, seed: 1 } => write!(f, "{case}"),
            ScenarioRef::Builtin { case, seed } => write!(f, "{case}:{seed}"),
            ScenarioRef::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl FromStr for ScenarioRef {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (tag, seed) = match s.split_once(':') {
            Some((tag, seed)) => match seed.parse::<u64>() {
                Ok(seed) => (tag, seed),
                Err(_) => return Ok(ScenarioRef::File(s.into())),
            },
            None => (s, 1),
        };
        Ok(match tag.parse::<Case>() {
            Ok(case) => ScenarioRef::Builtin { case, seed },
            Err(_) => ScenarioRef::File(s.into()),
        })
    }
}

/// Parse `1-30`, `1..30` (both inclusive), `4`, or comma-separated mixes.
pub fn parse_seeds(text: &str) -> Result<Vec<u64>, HarnessError> {
    let err = || HarnessError::Seeds(text.to_string());
    let mut seeds = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let range = part.split_once("..").or_else(|| part.split_once('-'));
        match range {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().map_err(|_| err())?;
                let b: u64 = b.trim_start_matches('=').trim().parse().map_err(|_| err())?;
                if a > b {
                    return Err(err());
                }
                seeds.extend(a..=b);
            }
            None => seeds.push(part.parse().map_err(|_| err())?),
        }
    }
    if seeds.is_empty() {
        return Err(err());
    }
    Ok(seeds)
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub scenarios: Vec<ScenarioRef>,
    pub algorithms: Vec<Algorithm>,
    pub seeds: Vec<u64>,
    pub population: usize,
    pub iterations: usize,
    pub penalty_weight: f64,
    pub output_dir: PathBuf,
    /// Concurrent runs; 0 lets the thread pool decide.
    pub workers: usize,
}

impl ExperimentSpec {
    /// Every builtin case, every algorithm, seeds 1..=30, 100 agents × 100 iterations.
    pub fn new(output_dir: impl Into<PathBuf>) -> Self {
        Self {
            scenarios: Case::ALL.iter().map(|&case| ScenarioRef::Builtin { case, seed: 1 }).collect(),
            algorithms: Algorithm::ALL.to_vec(),
            seeds: (1..=30).collect(),
            population: 100,
            iterations: 100,
            penalty_weight: trajopt_core::objective::DEFAULT_PENALTY_WEIGHT,
            output_dir: output_dir.into(),
            workers: 0,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::InvalidSpec(m.to_string()));
        if self.scenarios.is_empty() {
            return bad("no scenarios");
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms");
        }
        if self.seeds.is_empty() {
            return bad("no seeds");
        }
        if self.population == 0 || self.iterations == 0 {
            return bad("population and iterations must be positive");
        }
        if !(self.penalty_weight.is_finite() && self.penalty_weight >= 0.0) {
            return bad("penalty weight must be finite and non-negative");
        }
        Ok(())
    }
}

/// Outcome of one (scenario, algorithm, seed) run.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub scenario: String,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub final_cost: f64,
    pub path_length: f64,
    pub violation: f64,
    pub evaluations: u64,
    pub elapsed_s: f64,
}

#[derive(Debug, Clone)]
pub struct RunFailure {
    pub scenario: String,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub message: String,
}

/// Aggregate of all runs for one (scenario, algorithm) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub scenario: String,
    pub algorithm: String,
    pub runs: usize,
    pub median_cost: f64,
    pub mean_cost: f64,
    pub std_cost: f64,
    pub mean_evaluations: f64,
    pub median_time: f64,
}

#[derive(Debug)]
pub struct ExperimentOutcome {
    pub records: Vec<RunRecord>,
    pub failures: Vec<RunFailure>,
    pub summary: Vec<SummaryRow>,
}

pub(crate) fn run_dir(out: &Path, scenario: &str, algorithm: &str) -> PathBuf {
    out.join("runs").join(scenario).join(algorithm)
}

pub(crate) fn convergence_path(out: &Path, scenario: &str, algorithm: &str, seed: u64) -> PathBuf {
    run_dir(out, scenario, algorithm).join(format!("seed_{seed}.csv"))
}

pub(crate) fn trajectory_path(out: &Path, scenario: &str, algorithm: &str, seed: u64) -> PathBuf {
    run_dir(out, scenario, algorithm).join(format!("seed_{seed}_trajectory.csv"))
}

fn write_run_files(out: &Path, obj: &PathObjective, result: &RunResult, seed: u64) -> Result<(), HarnessError> {
    let scenario = obj.scenario().name();
    let algorithm = result.algorithm.as_str();
    let dir = run_dir(out, scenario, algorithm);
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;

    let path = convergence_path(out, scenario, algorithm, seed);
    let split = exploration_exploitation(&result.diversity);
    let mut w = csv::Writer::from_path(&path).map_err(csv_err(&path))?;
    w.write_record(["iteration", "best_cost", "diversity", "exploration_pct", "exploitation_pct"])
        .map_err(csv_err(&path))?;
    for (t, cost) in result.history.iter().enumerate() {
        w.write_record([
            (t + 1).to_string(),
            cost.to_string(),
            split.diversity[t].to_string(),
            split.exploration_pct[t].to_string(),
            split.exploitation_pct[t].to_string(),
        ])
        .map_err(csv_err(&path))?;
    }
    w.flush().map_err(io_err(&path))?;

    let path = trajectory_path(out, scenario, algorithm, seed);
    let trajectory = obj.decode(&result.best_vector).map_err(|e| HarnessError::Format {
        path: path.clone(),
        message: e.to_string(),
    })?;
    let mut w = csv::Writer::from_path(&path).map_err(csv_err(&path))?;
    w.write_record(["index", "x", "y"]).map_err(csv_err(&path))?;
    for (i, p) in trajectory.waypoints().iter().enumerate() {
        w.write_record([i.to_string(), p.x.to_string(), p.y.to_string()])
            .map_err(csv_err(&path))?;
    }
    w.flush().map_err(io_err(&path))?;
    Ok(())
}

fn execute(out: &Path, obj: &PathObjective, algorithm: Algorithm, seed: u64, spec: &ExperimentSpec) -> Result<RunRecord, String> {
    let result = optimize(algorithm, spec.population, spec.iterations, seed, obj).map_err(|e| e.to_string())?;
    write_run_files(out, obj, &result, seed).map_err(|e| e.to_string())?;
    let breakdown = obj.evaluate(&result.best_vector).map_err(|e| e.to_string())?;
    Ok(RunRecord {
        scenario: obj.scenario().name().to_string(),
        algorithm,
        seed,
        final_cost: result.best_cost,
        path_length: breakdown.path_length,
        violation: breakdown.violation,
        evaluations: result.evaluations,
        elapsed_s: result.elapsed.as_secs_f64(),
    })
}

/// Aggregate run records into one row per (scenario, algorithm), keeping
/// the order in which the cells first appear.
pub fn summarize(records: &[RunRecord]) -> Vec<SummaryRow> {
    let mut cells: Vec<(&str, Algorithm)> = Vec::new();
    for r in records {
        if !cells.contains(&(r.scenario.as_str(), r.algorithm)) {
            cells.push((r.scenario.as_str(), r.algorithm));
        }
    }
    cells
        .into_iter()
        .map(|(scenario, algorithm)| {
            let runs: Vec<&RunRecord> = records
                .iter()
                .filter(|r| r.scenario == scenario && r.algorithm == algorithm)
                .collect();
            let costs: Vec<f64> = runs.iter().map(|r| r.final_cost).collect();
            let times: Vec<f64> = runs.iter().map(|r| r.elapsed_s).collect();
            let evals: Vec<f64> = runs.iter().map(|r| r.evaluations as f64).collect();
            let cost = Summary::of(&costs);
            SummaryRow {
                scenario: scenario.to_string(),
                algorithm: algorithm.to_string(),
                runs: runs.len(),
                median_cost: cost.median,
                mean_cost: cost.mean,
                std_cost: cost.std,
                mean_evaluations: Summary::of(&evals).mean,
                median_time: Summary::of(&times).median,
            }
        })
        .collect()
}

pub const SUMMARY_HEADER: [&str; 8] = [
    "scenario",
    "algorithm",
    "runs",
    "median_cost",
    "mean_cost",
    "std_cost",
    "mean_evaluations",
    "median_time_s",
];

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(SUMMARY_HEADER).map_err(csv_err(path))?;
    for r in rows {
        w.write_record([
            r.scenario.clone(),
            r.algorithm.clone(),
            r.runs.to_string(),
            r.median_cost.to_string(),
            r.mean_cost.to_string(),
            r.std_cost.to_string(),
            r.mean_evaluations.to_string(),
            r.median_time.to_string(),
        ])
        .map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn read_summary(path: &Path) -> Result<Vec<SummaryRow>, HarnessError> {
    if !path.exists() {
        return Err(HarnessError::Missing(path.to_path_buf()));
    }
    let mut r = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let bad = |message: String| HarnessError::Format { path: path.to_path_buf(), message };
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err(path))?;
        if rec.len() != SUMMARY_HEADER.len() {
            return Err(bad(format!("expected {} columns, got {}", SUMMARY_HEADER.len(), rec.len())));
        }
        let num = |i: usize| rec[i].parse::<f64>().map_err(|_| bad(format!("`{}` is not a number", &rec[i])));
        rows.push(SummaryRow {
            scenario: rec[0].to_string(),
            algorithm: rec[1].to_string(),
            runs: rec[2].parse().map_err(|_| bad(format!("`{}` is not a count", &rec[2])))?,
            median_cost: num(3)?,
            mean_cost: num(4)?,
            std_cost: num(5)?,
            mean_evaluations: num(6)?,
            median_time: num(7)?,
        });
    }
    Ok(rows)
}

fn write_runs(path: &Path, records: &[RunRecord]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["scenario", "algorithm", "seed", "final_cost", "path_length", "violation", "evaluations", "elapsed_s"])
        .map_err(csv_err(path))?;
    for r in records {
        w.write_record([
            r.scenario.clone(),
            r.algorithm.to_string(),
            r.seed.to_string(),
            r.final_cost.to_string(),
            r.path_length.to_string(),
            r.violation.to_string(),
            r.evaluations.to_string(),
            r.elapsed_s.to_string(),
        ])
        .map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn write_failures(path: &Path, failures: &[RunFailure]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["scenario", "algorithm", "seed", "error"]).map_err(csv_err(path))?;
    for f in failures {
        w.write_record([f.scenario.clone(), f.algorithm.to_string(), f.seed.to_string(), f.message.clone()])
            .map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn metadata(spec: &ExperimentSpec, scenarios: &[Scenario]) -> String {
    let mut out = String::new();
    out += &format!("population {}\niterations {}\npenalty_weight {}\n", spec.population, spec.iterations, spec.penalty_weight);
    let seeds: Vec<String> = spec.seeds.iter().map(u64::to_string).collect();
    out += &format!("seeds {}\n", seeds.join(","));
    let names: Vec<&str> = scenarios.iter().map(Scenario::name).collect();
    out += &format!("scenarios {}\n", names.join(","));
    for alg in &spec.algorithms {
        let params = match alg {
            Algorithm::Hgo => trajopt_core::HgoConfig {
                population: spec.population,
                iterations: spec.iterations,
                ..Default::default()
            }
            .params(),
            other => trajopt_core::BaselineParams::default_for(*other).map(|p| p.entries()).unwrap_or_default(),
        };
        let rendered: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out += &format!("algorithm {alg} {}\n", rendered.join(" "));
    }
    out
}

/// Execute every run of `spec` and write all artifacts.
///
/// Scenario resolution errors abort the experiment; failures of individual
/// runs are collected in `failures.csv` and excluded from the summary.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutcome, HarnessError> {
    spec.validate()?;
    let scenarios: Vec<Scenario> = spec.scenarios.iter().map(ScenarioRef::resolve).collect::<Result<_, _>>()?;
    let mut seen = Vec::new();
    for s in &scenarios {
        if seen.contains(&s.name()) {
            return Err(HarnessError::InvalidSpec(format!("scenario name `{}` appears twice", s.name())));
        }
        seen.push(s.name());
    }

    let out = spec.output_dir.as_path();
    let scen_dir = out.join("scenarios");
    fs::create_dir_all(&scen_dir).map_err(io_err(&scen_dir))?;
    for s in &scenarios {
        let path = scen_dir.join(format!("{}.txt", s.name()));
        fs::write(&path, s.to_text()).map_err(io_err(&path))?;
    }

    let objectives: Vec<PathObjective> = scenarios
        .iter()
        .map(|s| PathObjective::new(s.clone(), spec.penalty_weight))
        .collect();
    let tasks: Vec<(usize, Algorithm, u64)> = (0..objectives.len())
        .flat_map(|i| spec.algorithms.iter().flat_map(move |&a| spec.seeds.iter().map(move |&s| (i, a, s))))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(|e| HarnessError::InvalidSpec(format!("worker pool: {e}")))?;
    let results: Vec<Result<RunRecord, RunFailure>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(i, algorithm, seed)| {
                execute(out, &objectives[i], algorithm, seed, spec).map_err(|message| RunFailure {
                    scenario: objectives[i].scenario().name().to_string(),
                    algorithm,
                    seed,
                    message,
                })
            })
            .collect()
    });

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(f) => failures.push(f),
        }
    }

    let summary = summarize(&records);
    write_runs(&out.join("runs.csv"), &records)?;
    let failures_path = out.join("failures.csv");
    if failures.is_empty() {
        if failures_path.exists() {
            fs::remove_file(&failures_path).map_err(io_err(&failures_path))?;
        }
    } else {
        write_failures(&failures_path, &failures)?;
    }
    write_summary(&out.join("summary.csv"), &summary)?;
    if !summary.is_empty() {
        let path = out.join("ranking.txt");
        fs::write(&path, report_table(&summary)).map_err(io_err(&path))?;
    }
    let path = out.join("metadata.txt");
    fs::write(&path, metadata(spec, &scenarios)).map_err(io_err(&path))?;

    Ok(ExperimentOutcome { records, failures, summary })
}
