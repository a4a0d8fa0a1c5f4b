//! Experiment harness: runs optimizer/scenario grids over many seeds, writes
//! per-run convergence logs and trajectories, aggregates them, and emits
//! plot-ready data.

pub mod experiment;
pub mod plot;
pub mod report;
pub mod stats;

pub use experiment::{
    parse_seeds, read_summary, run_experiment, summarize, write_summary, ExperimentOutcome, ExperimentSpec,
    HarnessError, RunFailure, RunRecord, ScenarioRef, SummaryRow,
};
pub use plot::{emit_plot_data, final_costs, PlotFiles};
pub use report::{rank, report_table};
pub use stats::Summary;
