use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use trajopt::{emit_plot_data, run_experiment, ExperimentSpec, HarnessError, ScenarioRef};
use trajopt_core::{Algorithm, Case};

fn small_spec(out: &Path) -> ExperimentSpec {
    ExperimentSpec {
        scenarios: vec![ScenarioRef::Builtin { case: Case::Ambient, seed: 1 }],
        algorithms: vec![Algorithm::Hgo],
        seeds: vec![1, 2, 3],
        population: 12,
        iterations: 15,
        workers: 2,
        ..ExperimentSpec::new(out)
    }
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
}

fn without_last_column(path: &Path) -> String {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head).to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn three_seeds_give_three_files_and_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let outcome = run_experiment(&small_spec(dir.path())).unwrap();
    assert_eq!(outcome.records.len(), 3);
    assert!(outcome.failures.is_empty());
    assert_eq!(outcome.summary.len(), 1);
    assert_eq!(outcome.summary[0].runs, 3);

    let runs = dir.path().join("runs/ambient/hgo");
    let convergence: Vec<PathBuf> = fs::read_dir(&runs)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| !p.to_string_lossy().ends_with("_trajectory.csv"))
        .collect();
    assert_eq!(convergence.len(), 3);
    for seed in 1..=3 {
        let rows = csv_rows(&runs.join(format!("seed_{seed}.csv")));
        assert_eq!(rows.len(), 15);
        let traj = csv_rows(&runs.join(format!("seed_{seed}_trajectory.csv")));
        assert_eq!(traj.len(), 5);
    }
    let summary = csv_rows(&dir.path().join("summary.csv"));
    assert_eq!(summary.len(), 1);
    assert_eq!(summary[0][2], "3");
    assert!(dir.path().join("scenarios/ambient.txt").exists());
    assert!(fs::read_to_string(dir.path().join("metadata.txt")).unwrap().contains("algorithm hgo"));
}

#[test]
fn rerun_is_identical_apart_from_timing() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let mut spec = small_spec(a.path());
    spec.algorithms = vec![Algorithm::Hgo, Algorithm::Pso];
    run_experiment(&spec).unwrap();
    spec.output_dir = b.path().to_path_buf();
    spec.workers = 1;
    run_experiment(&spec).unwrap();

    assert_eq!(without_last_column(&a.path().join("summary.csv")), without_last_column(&b.path().join("summary.csv")));
    assert_eq!(without_last_column(&a.path().join("runs.csv")), without_last_column(&b.path().join("runs.csv")));
    for alg in ["hgo", "pso"] {
        for seed in 1..=3 {
            for name in [format!("seed_{seed}.csv"), format!("seed_{seed}_trajectory.csv")] {
                let rel = Path::new("runs/ambient").join(alg).join(&name);
                assert_eq!(fs::read(a.path().join(&rel)).unwrap(), fs::read(b.path().join(&rel)).unwrap());
            }
        }
    }
}

#[test]
fn curves_and_overlays() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = small_spec(dir.path());
    spec.iterations = 100;
    spec.algorithms = vec![Algorithm::Hgo, Algorithm::Gwo];
    run_experiment(&spec).unwrap();
    let files = emit_plot_data(dir.path()).unwrap();
    assert_eq!(files.curves.len(), 2);
    assert_eq!(files.overlays.len(), 1);

    for curve in &files.curves {
        let rows = csv_rows(curve);
        assert_eq!(rows.len(), 100);
        let values: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] <= w[0]));
    }

    let scenario = trajopt_core::builtin_scenario(Case::Ambient, 1).unwrap();
    let overlay = csv_rows(&files.overlays[0]);
    let obstacles = overlay.iter().filter(|r| r[0] == "obstacle").count();
    assert_eq!(obstacles, scenario.obstacles().len());
    for alg in ["hgo", "gwo"] {
        let waypoints = overlay.iter().filter(|r| r[0] == "waypoint" && r[1] == alg).count();
        assert_eq!(waypoints, scenario.num_control_points() + 2);
    }
}

#[test]
fn missing_inputs_are_named() {
    let dir = tempfile::tempdir().unwrap();
    match emit_plot_data(dir.path()) {
        Err(HarnessError::Missing(p)) => assert!(p.ends_with("summary.csv")),
        other => panic!("unexpected {other:?}"),
    }

    run_experiment(&small_spec(dir.path())).unwrap();
    let costs = trajopt::final_costs(dir.path(), "ambient", "hgo").unwrap();
    let best = costs.iter().min_by(|a, b| a.1.total_cmp(&b.1)).unwrap().0;
    let victim = dir.path().join(format!("runs/ambient/hgo/seed_{best}_trajectory.csv"));
    fs::remove_file(&victim).unwrap();
    match emit_plot_data(dir.path()) {
        Err(HarnessError::Missing(p)) => assert_eq!(p, victim),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn unreadable_scenario_aborts() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = small_spec(dir.path());
    spec.scenarios.push(ScenarioRef::File(dir.path().join("absent.txt")));
    let err = run_experiment(&spec).unwrap_err();
    assert!(matches!(err, HarnessError::Scenario { .. }));
    assert!(err.to_string().contains("absent.txt"));
    assert!(!dir.path().join("summary.csv").exists());
}

#[test]
fn bad_run_is_recorded_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = small_spec(dir.path());
    // 3 agents in 5 clusters is rejected by HGO but fine for PSO
    spec.population = 3;
    spec.algorithms = vec![Algorithm::Hgo, Algorithm::Pso];
    let outcome = run_experiment(&spec).unwrap();
    assert_eq!(outcome.failures.len(), 3);
    assert!(outcome.failures.iter().all(|f| f.algorithm == Algorithm::Hgo));
    assert_eq!(outcome.summary.len(), 1);
    assert_eq!(outcome.summary[0].algorithm, "pso");
    assert_eq!(csv_rows(&dir.path().join("failures.csv")).len(), 3);
}

#[test]
fn cli_round_trip() {
    let bin = env!("CARGO_BIN_EXE_trajopt");
    let dir = tempfile::tempdir().unwrap();
    let scen = dir.path().join("scen");
    let status = Command::new(bin).args(["scenario", "--case", "constrict", "--out"]).arg(&scen).status().unwrap();
    assert!(status.success());
    let file = scen.join("constrict.txt");
    assert_eq!(
        fs::read_to_string(&file).unwrap(),
        trajopt_core::builtin_scenario(Case::Constrict, 1).unwrap().to_text()
    );

    let out = dir.path().join("exp");
    let run = Command::new(bin)
        .args(["run", "--scenario"])
        .arg(&file)
        .args(["--algorithm", "gwo", "--algorithm", "csa", "--seeds", "1,2", "--population", "8", "--iterations", "5", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let table = String::from_utf8(run.stdout).unwrap();
    assert_eq!(table.lines().count(), 3);
    assert_eq!(table.lines().filter(|l| l.ends_with('*')).count(), 1);

    let missing = Command::new(bin).args(["report"]).arg(dir.path().join("nowhere")).output().unwrap();
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("report"));

    let bad_seeds = Command::new(bin)
        .args(["run", "--scenario", "ambient", "--seeds", "x", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(!bad_seeds.status.success());
    assert!(String::from_utf8_lossy(&bad_seeds.stderr).contains("parsing seeds"));
}
