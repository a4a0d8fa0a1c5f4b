//! Reference swarm optimizers used as comparison baselines.
//!
//! Each follows the update rules of its original publication and reports the
//! same [`RunResult`] as HGO: elitist best-cost history, per-iteration
//! population diversity, evaluation count.

mod bmo;
mod csa;
mod gwo;
mod pso;

pub use bmo::run_bmo;
pub use csa::{levy_step, mantegna_sigma, run_csa};
pub use gwo::run_gwo;
pub use pso::run_pso;

use crate::objective::Objective;
use crate::optim::{Algorithm, ConfigError, RunResult};

/// Algorithm-specific hyper-parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum BaselineParams {
    Pso { inertia: f64, cognitive: f64, social: f64 },
    /// Coefficient `a` decays linearly from `a_start` to `a_end`.
    Gwo { a_start: f64, a_end: f64 },
    Csa { discovery: f64, levy_exponent: f64, step_scale: f64 },
    /// Mating happens only between parents at most `penis_length` ranks apart.
    Bmo { penis_length: usize },
}

impl BaselineParams {
    pub fn default_for(algorithm: Algorithm) -> Option<Self> {
        Some(match algorithm {
            Algorithm::Pso => BaselineParams::Pso { inertia: 0.729, cognitive: 1.49445, social: 1.49445 },
            Algorithm::Gwo => BaselineParams::Gwo { a_start: 2.0, a_end: 0.0 },
            Algorithm::Csa => BaselineParams::Csa { discovery: 0.25, levy_exponent: 1.5, step_scale: 0.01 },
            Algorithm::Bmo => BaselineParams::Bmo { penis_length: 7 },
            Algorithm::Hgo => return None,
        })
    }

    pub fn algorithm(&self) -> Algorithm {
        match self {
            BaselineParams::Pso { .. } => Algorithm::Pso,
            BaselineParams::Gwo { .. } => Algorithm::Gwo,
            BaselineParams::Csa { .. } => Algorithm::Csa,
            BaselineParams::Bmo { .. } => Algorithm::Bmo,
        }
    }

    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        match *self {
            BaselineParams::Pso { inertia, cognitive, social } => {
                vec![("inertia", inertia), ("cognitive", cognitive), ("social", social)]
            }
            BaselineParams::Gwo { a_start, a_end } => vec![("a_start", a_start), ("a_end", a_end)],
            BaselineParams::Csa { discovery, levy_exponent, step_scale } => vec![
                ("discovery", discovery),
                ("levy_exponent", levy_exponent),
                ("step_scale", step_scale),
            ],
            BaselineParams::Bmo { penis_length } => vec![("penis_length", penis_length as f64)],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineConfig {
    pub population: usize,
    pub iterations: usize,
    pub seed: u64,
    pub params: BaselineParams,
}

impl BaselineConfig {
    /// Defaults (100 agents, 100 iterations) for a baseline algorithm.
    pub fn new(algorithm: Algorithm, seed: u64) -> Result<Self, ConfigError> {
        let params = BaselineParams::default_for(algorithm)
            .ok_or_else(|| ConfigError::Invalid(format!("{algorithm} is not a baseline")))?;
        Ok(Self { population: 100, iterations: 100, seed, params })
    }

    pub fn algorithm(&self) -> Algorithm {
        self.params.algorithm()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if self.population < 2 {
            return bad("population must be at least 2".into());
        }
        if self.iterations == 0 {
            return bad("iterations must be at least 1".into());
        }
        if self.params.entries().iter().any(|(_, v)| !v.is_finite()) {
            return bad("parameters must be finite".into());
        }
        match self.params {
            BaselineParams::Pso { inertia, cognitive, social } => {
                if inertia < 0.0 || cognitive <= 0.0 || social <= 0.0 {
                    return bad("PSO coefficients must be positive".into());
                }
            }
            BaselineParams::Gwo { a_start, a_end } => {
                if a_start < 0.0 || a_end < 0.0 {
                    return bad("GWO coefficients must be non-negative".into());
                }
            }
            BaselineParams::Csa { discovery, levy_exponent, step_scale } => {
                if !(0.0..=1.0).contains(&discovery) {
                    return bad(format!("discovery probability {discovery} outside [0, 1]"));
                }
                if !(levy_exponent > 0.0 && levy_exponent <= 2.0) {
                    return bad(format!("Levy exponent {levy_exponent} outside (0, 2]"));
                }
                if step_scale <= 0.0 {
                    return bad("step scale must be positive".into());
                }
            }
            BaselineParams::Bmo { penis_length } => {
                if penis_length == 0 {
                    return bad("penis length must be at least 1".into());
                }
            }
        }
        Ok(())
    }

    pub(crate) fn metadata(&self) -> Vec<(&'static str, f64)> {
        let mut m = vec![("population", self.population as f64), ("iterations", self.iterations as f64)];
        m.extend(self.params.entries());
        m
    }
}

/// Run whichever baseline `cfg` describes.
pub fn run_baseline<O: Objective + ?Sized>(cfg: &BaselineConfig, obj: &O) -> Result<RunResult, ConfigError> {
    match cfg.algorithm() {
        Algorithm::Pso => run_pso(cfg, obj),
        Algorithm::Gwo => run_gwo(cfg, obj),
        Algorithm::Csa => run_csa(cfg, obj),
        Algorithm::Bmo => run_bmo(cfg, obj),
        Algorithm::Hgo => unreachable!("baseline params never describe HGO"),
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::Sphere;
    use super::*;

    const BASELINES: [Algorithm; 4] = [Algorithm::Pso, Algorithm::Gwo, Algorithm::Csa, Algorithm::Bmo];

    #[test]
    fn shared_contract() {
        let obj = Sphere::new(6, 3.0);
        for alg in BASELINES {
            let cfg = BaselineConfig { iterations: 40, ..BaselineConfig::new(alg, 17).unwrap() };
            let a = run_baseline(&cfg, &obj).unwrap();
            let b = run_baseline(&cfg, &obj).unwrap();
            assert_eq!(a.algorithm, alg);
            assert_eq!(a.history, b.history, "{alg}");
            assert_eq!(a.best_vector, b.best_vector, "{alg}");
            assert_eq!(a.history.len(), 40);
            assert_eq!(a.diversity.len(), 40);
            assert!(a.history.windows(2).all(|w| w[1] <= w[0]), "{alg}");
            assert!(obj.in_bounds(&a.best_vector));
            assert_eq!(obj.cost(&a.best_vector), a.best_cost);
            assert!(a.evaluations >= 100 * 41);
        }
    }

    #[test]
    fn converges_on_sphere() {
        let obj = Sphere::new(4, 3.0);
        for alg in BASELINES {
            let cfg = BaselineConfig::new(alg, 3).unwrap();
            let r = run_baseline(&cfg, &obj).unwrap();
            assert!(r.best_cost < 0.5, "{alg}: {}", r.best_cost);
        }
    }

    #[test]
    fn single_iteration_smoke() {
        let obj = Sphere::new(4, 3.0);
        for alg in BASELINES {
            let cfg = BaselineConfig { iterations: 1, population: 10, ..BaselineConfig::new(alg, 5).unwrap() };
            let r = run_baseline(&cfg, &obj).unwrap();
            assert_eq!(r.history.len(), 1);
            assert_eq!(r.history[0], r.best_cost);
        }
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(BaselineConfig::new(Algorithm::Hgo, 0).is_err());
        let base = BaselineConfig::new(Algorithm::Csa, 0).unwrap();
        assert!(BaselineConfig { population: 1, ..base.clone() }.validate().is_err());
        assert!(BaselineConfig { iterations: 0, ..base.clone() }.validate().is_err());
        let bad_pa = BaselineParams::Csa { discovery: 1.5, levy_exponent: 1.5, step_scale: 0.01 };
        assert!(BaselineConfig { params: bad_pa, ..base.clone() }.validate().is_err());
        let bad_bmo = BaselineParams::Bmo { penis_length: 0 };
        assert!(BaselineConfig { params: bad_bmo, ..base }.validate().is_err());
    }
}
