//! Grey wolf optimizer: every wolf moves to the mean of three positions
//! estimated from the alpha, beta and delta leaders.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BaselineConfig, BaselineParams};
use crate::objective::Objective;
use crate::optim::{uniform_position, Algorithm, ConfigError, RunResult, Tracker};

/// The three best positions seen so far, best first.
struct Leaders {
    pos: [Vec<f64>; 3],
    score: [f64; 3],
}

impl Leaders {
    fn new(dim: usize) -> Self {
        Self { pos: [vec![0.0; dim], vec![0.0; dim], vec![0.0; dim]], score: [f64::INFINITY; 3] }
    }

    fn offer(&mut self, x: &[f64], f: f64) {
        let Some(rank) = self.score.iter().position(|&s| f < s) else { return };
        for k in (rank + 1..3).rev() {
            self.score[k] = self.score[k - 1];
            self.pos[k] = self.pos[k - 1].clone();
        }
        self.score[rank] = f;
        self.pos[rank].copy_from_slice(x);
    }
}

pub fn run_gwo<O: Objective + ?Sized>(cfg: &BaselineConfig, obj: &O) -> Result<RunResult, ConfigError> {
    cfg.validate()?;
    let BaselineParams::Gwo { a_start, a_end } = cfg.params else {
        return Err(ConfigError::Invalid("GWO run needs GWO parameters".into()));
    };
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tracker = Tracker::new(obj.dim(), cfg.iterations);
    let mut leaders = Leaders::new(obj.dim());

    let mut wolves: Vec<Vec<f64>> = (0..cfg.population).map(|_| uniform_position(obj, &mut rng)).collect();
    for w in &wolves {
        let f = tracker.evaluate(obj, w);
        leaders.offer(w, f);
    }

    for t in 0..cfg.iterations {
        let a = a_start - (a_start - a_end) * t as f64 / cfg.iterations as f64;
        for w in wolves.iter_mut() {
            for d in 0..w.len() {
                let mut sum = 0.0;
                for leader in &leaders.pos {
                    let r1: f64 = rng.gen();
                    let r2: f64 = rng.gen();
                    let big_a = 2.0 * a * r1 - a;
                    let big_c = 2.0 * r2;
                    let dist = (big_c * leader[d] - w[d]).abs();
                    sum += leader[d] - big_a * dist;
                }
                w[d] = sum / 3.0;
            }
            obj.clamp(w);
        }
        for w in &wolves {
            let f = tracker.evaluate(obj, w);
            leaders.offer(w, f);
        }
        tracker.end_iteration(&wolves);
    }
    Ok(tracker.finish(Algorithm::Gwo, started.elapsed(), cfg.metadata()))
}
