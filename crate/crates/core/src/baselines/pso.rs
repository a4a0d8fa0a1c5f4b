//! Global-best particle swarm with inertia weight.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BaselineConfig, BaselineParams};
use crate::objective::Objective;
use crate::optim::{uniform_position, Algorithm, ConfigError, RunResult, Tracker};

pub fn run_pso<O: Objective + ?Sized>(cfg: &BaselineConfig, obj: &O) -> Result<RunResult, ConfigError> {
    cfg.validate()?;
    let BaselineParams::Pso { inertia, cognitive, social } = cfg.params else {
        return Err(ConfigError::Invalid("PSO run needs PSO parameters".into()));
    };
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tracker = Tracker::new(obj.dim(), cfg.iterations);
    // |v| per dimension never exceeds the width of the box
    let vmax: Vec<f64> = obj.lower().iter().zip(obj.upper()).map(|(lo, hi)| hi - lo).collect();

    let mut positions: Vec<Vec<f64>> = (0..cfg.population).map(|_| uniform_position(obj, &mut rng)).collect();
    let mut velocities = vec![vec![0.0; obj.dim()]; cfg.population];
    let mut personal: Vec<Vec<f64>> = positions.clone();
    let mut personal_cost: Vec<f64> = positions.iter().map(|x| tracker.evaluate(obj, x)).collect();

    for _ in 0..cfg.iterations {
        let global = tracker.best_vector.clone();
        for i in 0..cfg.population {
            let (x, v) = (&mut positions[i], &mut velocities[i]);
            for d in 0..x.len() {
                let r1: f64 = rng.gen();
                let r2: f64 = rng.gen();
                v[d] = inertia * v[d] + cognitive * r1 * (personal[i][d] - x[d]) + social * r2 * (global[d] - x[d]);
                v[d] = v[d].clamp(-vmax[d], vmax[d]);
                x[d] += v[d];
            }
            obj.clamp(x);
            let f = tracker.evaluate(obj, x);
            if f < personal_cost[i] {
                personal_cost[i] = f;
                personal[i].copy_from_slice(x);
            }
        }
        tracker.end_iteration(&positions);
    }
    Ok(tracker.finish(Algorithm::Pso, started.elapsed(), cfg.metadata()))
}
