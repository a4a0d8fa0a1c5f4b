//! Cuckoo search: Levy-flight moves scaled by the distance to the best nest,
//! greedy replacement, and abandonment of the worst nests.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{BaselineConfig, BaselineParams};
use crate::objective::Objective;
use crate::optim::{uniform_position, worst_first, Algorithm, ConfigError, RunResult, Tracker};

/// Scale of the numerator normal in Mantegna's algorithm.
pub fn mantegna_sigma(beta: f64) -> f64 {
    let num = libm::tgamma(1.0 + beta) * (PI * beta / 2.0).sin();
    let den = libm::tgamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

/// One Levy-stable step with index `beta` (Mantegna's algorithm).
pub fn levy_step<R: Rng>(beta: f64, sigma: f64, rng: &mut R) -> f64 {
    let u: f64 = rng.sample::<f64, _>(StandardNormal) * sigma;
    let v: f64 = rng.sample(StandardNormal);
    u / v.abs().powf(1.0 / beta)
}

pub fn run_csa<O: Objective + ?Sized>(cfg: &BaselineConfig, obj: &O) -> Result<RunResult, ConfigError> {
    cfg.validate()?;
    let BaselineParams::Csa { discovery, levy_exponent, step_scale } = cfg.params else {
        return Err(ConfigError::Invalid("CSA run needs CSA parameters".into()));
    };
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tracker = Tracker::new(obj.dim(), cfg.iterations);
    let sigma = mantegna_sigma(levy_exponent);
    let abandoned = (discovery * cfg.population as f64).round() as usize;

    let mut nests: Vec<Vec<f64>> = (0..cfg.population).map(|_| uniform_position(obj, &mut rng)).collect();
    let mut fitness: Vec<f64> = nests.iter().map(|x| tracker.evaluate(obj, x)).collect();

    for _ in 0..cfg.iterations {
        let best = tracker.best_vector.clone();
        for i in 0..cfg.population {
            let mut trial: Vec<f64> = nests[i]
                .iter()
                .zip(&best)
                .map(|(&x, &b)| {
                    let step = step_scale * levy_step(levy_exponent, sigma, &mut rng) * (x - b);
                    x + step * rng.sample::<f64, _>(StandardNormal)
                })
                .collect();
            obj.clamp(&mut trial);
            let f = tracker.evaluate(obj, &trial);
            if f < fitness[i] {
                fitness[i] = f;
                nests[i] = trial;
            }
        }
        for i in worst_first(&fitness).into_iter().take(abandoned) {
            nests[i] = uniform_position(obj, &mut rng);
            fitness[i] = tracker.evaluate(obj, &nests[i]);
        }
        tracker.end_iteration(&nests);
    }
    Ok(tracker.finish(Algorithm::Csa, started.elapsed(), cfg.metadata()))
}
