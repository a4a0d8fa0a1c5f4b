//! Trajectory optimization for a UAV crossing a field of circular obstacles.
//!
//! A candidate solution is a flat vector of control-point coordinates; the
//! cost is the length of the polyline start → control points → destination
//! plus a penalty proportional to how deep the path cuts into obstacles.
//! [`hgo`] implements Henry gas optimization; [`baselines`] provides PSO,
//! GWO, cuckoo search, and the barnacles mating optimizer for comparison.

pub mod baselines;
pub mod diagnostics;
pub mod geometry;
pub mod hgo;
pub mod objective;
pub mod optim;
pub mod scenario;

pub use baselines::{BaselineConfig, BaselineParams};
pub use diagnostics::{exploration_exploitation, population_diversity, DiversitySeries};
pub use geometry::{distance, segment_circle_penetration, CircleObstacle, Point2, Segment};
pub use hgo::HgoConfig;
pub use objective::{CostBreakdown, Objective, PathObjective, Trajectory};
pub use optim::{Algorithm, ConfigError, RunResult};
pub use scenario::{builtin_scenario, load_scenario, save_scenario, Case, Scenario, ScenarioError};

/// Run `algorithm` with its default hyper-parameters.
pub fn optimize<O: Objective + ?Sized>(
    algorithm: Algorithm,
    population: usize,
    iterations: usize,
    seed: u64,
    obj: &O,
) -> Result<RunResult, ConfigError> {
    match algorithm {
        Algorithm::Hgo => {
            let cfg = HgoConfig { population, iterations, seed, ..HgoConfig::default() };
            hgo::run(&cfg, obj)
        }
        other => {
            let cfg = BaselineConfig { population, iterations, ..BaselineConfig::new(other, seed)? };
            baselines::run_baseline(&cfg, obj)
        }
    }
}
