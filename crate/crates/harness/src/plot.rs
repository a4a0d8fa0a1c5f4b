//! Plot-ready data derived from an experiment directory.
//!
//! For every (scenario, algorithm) cell in `summary.csv`:
//! `plots/<scenario>_<algorithm>_curve.csv` holds iteration vs. median best
//! cost across seeds. For every scenario, `plots/<scenario>_overlay.csv`
//! lists obstacle circles and the best-run polyline of each algorithm.

use std::fs;
use std::path::{Path, PathBuf};

use trajopt_core::load_scenario;

use crate::experiment::{convergence_path, csv_err, io_err, read_summary, run_dir, trajectory_path, HarnessError};
use crate::stats::Summary;

#[derive(Debug, Default)]
pub struct PlotFiles {
    pub curves: Vec<PathBuf>,
    pub overlays: Vec<PathBuf>,
}

fn seeds_in(dir: &Path) -> Result<Vec<u64>, HarnessError> {
    if !dir.is_dir() {
        return Err(HarnessError::Missing(dir.to_path_buf()));
    }
    let mut seeds = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err(dir))? {
        let name = entry.map_err(io_err(dir))?.file_name();
        let name = name.to_string_lossy();
        if let Some(seed) = name.strip_prefix("seed_").and_then(|s| s.strip_suffix(".csv")) {
            if let Ok(seed) = seed.parse() {
                seeds.push(seed);
            }
        }
    }
    seeds.sort_unstable();
    Ok(seeds)
}

fn read_column(path: &Path, column: &str) -> Result<Vec<f64>, HarnessError> {
    if !path.exists() {
        return Err(HarnessError::Missing(path.to_path_buf()));
    }
    let mut r = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let bad = |message: String| HarnessError::Format { path: path.to_path_buf(), message };
    let idx = r
        .headers()
        .map_err(csv_err(path))?
        .iter()
        .position(|h| h == column)
        .ok_or_else(|| bad(format!("no `{column}` column")))?;
    let mut values = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err(path))?;
        values.push(rec[idx].parse().map_err(|_| bad(format!("`{}` is not a number", &rec[idx])))?);
    }
    Ok(values)
}

/// Final best cost of every seed's convergence file in a run directory.
pub fn final_costs(out: &Path, scenario: &str, algorithm: &str) -> Result<Vec<(u64, f64)>, HarnessError> {
    seeds_in(&run_dir(out, scenario, algorithm))?
        .into_iter()
        .map(|seed| {
            let path = convergence_path(out, scenario, algorithm, seed);
            let history = read_column(&path, "best_cost")?;
            let last = *history.last().ok_or_else(|| HarnessError::Format {
                path: path.clone(),
                message: "empty convergence history".into(),
            })?;
            Ok((seed, last))
        })
        .collect()
}

/// Write curve and overlay files for the experiment in `out`.
///
/// Fails naming the first missing input file.
pub fn emit_plot_data(out: &Path) -> Result<PlotFiles, HarnessError> {
    let summary = read_summary(&out.join("summary.csv"))?;
    let plots = out.join("plots");
    fs::create_dir_all(&plots).map_err(io_err(&plots))?;
    let mut files = PlotFiles::default();

    let mut scenarios: Vec<&str> = Vec::new();
    for row in &summary {
        if !scenarios.contains(&row.scenario.as_str()) {
            scenarios.push(&row.scenario);
        }
        let seeds = seeds_in(&run_dir(out, &row.scenario, &row.algorithm))?;
        let histories: Vec<Vec<f64>> = seeds
            .iter()
            .map(|&s| read_column(&convergence_path(out, &row.scenario, &row.algorithm, s), "best_cost"))
            .collect::<Result<_, _>>()?;
        let len = histories.iter().map(Vec::len).min().unwrap_or(0);

        let path = plots.join(format!("{}_{}_curve.csv", row.scenario, row.algorithm));
        let mut w = csv::Writer::from_path(&path).map_err(csv_err(&path))?;
        w.write_record(["iteration", "median_best_cost"]).map_err(csv_err(&path))?;
        for t in 0..len {
            let column: Vec<f64> = histories.iter().map(|h| h[t]).collect();
            w.write_record([(t + 1).to_string(), Summary::of(&column).median.to_string()])
                .map_err(csv_err(&path))?;
        }
        w.flush().map_err(io_err(&path))?;
        files.curves.push(path);
    }

    for scenario in scenarios {
        let scen_path = out.join("scenarios").join(format!("{scenario}.txt"));
        if !scen_path.exists() {
            return Err(HarnessError::Missing(scen_path));
        }
        let scen = load_scenario(&scen_path).map_err(|source| HarnessError::Scenario {
            reference: scen_path.display().to_string(),
            source,
        })?;

        let path = plots.join(format!("{scenario}_overlay.csv"));
        let mut w = csv::Writer::from_path(&path).map_err(csv_err(&path))?;
        w.write_record(["kind", "label", "index", "x", "y", "radius"]).map_err(csv_err(&path))?;
        for (i, o) in scen.obstacles().iter().enumerate() {
            w.write_record([
                "obstacle".to_string(),
                String::new(),
                i.to_string(),
                o.center.x.to_string(),
                o.center.y.to_string(),
                o.effective_radius().to_string(),
            ])
            .map_err(csv_err(&path))?;
        }
        for row in summary.iter().filter(|r| r.scenario == scenario) {
            let costs = final_costs(out, scenario, &row.algorithm)?;
            let Some(&(best_seed, _)) = costs.iter().min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0))) else {
                continue;
            };
            let traj = trajectory_path(out, scenario, &row.algorithm, best_seed);
            let xs = read_column(&traj, "x")?;
            let ys = read_column(&traj, "y")?;
            for (i, (x, y)) in xs.iter().zip(&ys).enumerate() {
                w.write_record([
                    "waypoint".to_string(),
                    row.algorithm.clone(),
                    i.to_string(),
                    x.to_string(),
                    y.to_string(),
                    String::new(),
                ])
                .map_err(csv_err(&path))?;
            }
        }
        w.flush().map_err(io_err(&path))?;
        files.overlays.push(path);
    }
    Ok(files)
}
