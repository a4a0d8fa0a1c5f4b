//! Barnacles mating optimizer.
//!
//! Parents are paired through two random permutations of the fitness
//! ranking. Pairs at most `penis_length` ranks apart mate (convex
//! combination of the parents); the rest reproduce by sperm casting (a
//! random scaling of the mother). Parents and offspring compete and the best
//! half survives.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BaselineConfig, BaselineParams};
use crate::objective::Objective;
use crate::optim::{best_first, uniform_position, Algorithm, ConfigError, RunResult, Tracker};

pub fn run_bmo<O: Objective + ?Sized>(cfg: &BaselineConfig, obj: &O) -> Result<RunResult, ConfigError> {
    cfg.validate()?;
    let BaselineParams::Bmo { penis_length } = cfg.params else {
        return Err(ConfigError::Invalid("BMO run needs BMO parameters".into()));
    };
    let started = Instant::now();
    let n = cfg.population;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tracker = Tracker::new(obj.dim(), cfg.iterations);

    let mut pop: Vec<Vec<f64>> = (0..n).map(|_| uniform_position(obj, &mut rng)).collect();
    let mut fitness: Vec<f64> = pop.iter().map(|x| tracker.evaluate(obj, x)).collect();
    sort_population(&mut pop, &mut fitness);

    let mut dads: Vec<usize> = (0..n).collect();
    let mut mums: Vec<usize> = (0..n).collect();
    for _ in 0..cfg.iterations {
        dads.shuffle(&mut rng);
        mums.shuffle(&mut rng);
        let mut offspring = Vec::with_capacity(n);
        for (&dad, &mum) in dads.iter().zip(&mums) {
            let mut child: Vec<f64> = if dad.abs_diff(mum) <= penis_length {
                let p: f64 = rng.gen();
                pop[dad].iter().zip(&pop[mum]).map(|(d, m)| p * d + (1.0 - p) * m).collect()
            } else {
                pop[mum].iter().map(|m| rng.gen::<f64>() * m).collect()
            };
            obj.clamp(&mut child);
            offspring.push(child);
        }
        let child_fitness: Vec<f64> = offspring.iter().map(|x| tracker.evaluate(obj, x)).collect();

        pop.extend(offspring);
        fitness.extend(child_fitness);
        sort_population(&mut pop, &mut fitness);
        pop.truncate(n);
        fitness.truncate(n);
        tracker.end_iteration(&pop);
    }
    Ok(tracker.finish(Algorithm::Bmo, started.elapsed(), cfg.metadata()))
}

/// Reorder best first (stable on ties).
fn sort_population(pop: &mut Vec<Vec<f64>>, fitness: &mut Vec<f64>) {
    let order = best_first(fitness);
    *pop = order.iter().map(|&i| std::mem::take(&mut pop[i])).collect();
    *fitness = order.iter().map(|&i| fitness[i]).collect();
}
