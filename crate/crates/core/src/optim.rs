//! Pieces shared by every optimizer: the run record, algorithm tags, and
//! elitist bookkeeping.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rand::Rng;
use thiserror::Error;

use crate::diagnostics::population_diversity;
use crate::objective::Objective;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("unknown algorithm `{0}` (expected one of hgo, pso, gwo, csa, bmo)")]
    UnknownAlgorithm(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Hgo,
    Pso,
    Gwo,
    Csa,
    Bmo,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [Algorithm::Hgo, Algorithm::Pso, Algorithm::Gwo, Algorithm::Csa, Algorithm::Bmo];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Hgo => "hgo",
            Algorithm::Pso => "pso",
            Algorithm::Gwo => "gwo",
            Algorithm::Csa => "csa",
            Algorithm::Bmo => "bmo",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConfigError::UnknownAlgorithm(s.to_string()))
    }
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub best_cost: f64,
    pub best_vector: Vec<f64>,
    /// Best cost found so far, recorded at the end of each iteration.
    pub history: Vec<f64>,
    /// Population diversity at the end of each iteration.
    pub diversity: Vec<f64>,
    /// Objective evaluations spent, including the initial population.
    pub evaluations: u64,
    pub elapsed: Duration,
    /// Hyper-parameters the run used, for the output metadata.
    pub params: Vec<(&'static str, f64)>,
}

/// Elitist best-so-far tracker plus per-iteration recording.
#[derive(Debug, Clone)]
pub(crate) struct Tracker {
    pub best_cost: f64,
    pub best_vector: Vec<f64>,
    pub history: Vec<f64>,
    pub diversity: Vec<f64>,
    pub evaluations: u64,
}

impl Tracker {
    pub fn new(dim: usize, iterations: usize) -> Self {
        Self {
            best_cost: f64::INFINITY,
            best_vector: vec![0.0; dim],
            history: Vec::with_capacity(iterations),
            diversity: Vec::with_capacity(iterations),
            evaluations: 0,
        }
    }

    /// Evaluate `x`, updating the incumbent when it strictly improves.
    pub fn evaluate<O: Objective + ?Sized>(&mut self, obj: &O, x: &[f64]) -> f64 {
        let f = obj.cost(x);
        self.record(x, f);
        f
    }

    /// Account for an evaluation made elsewhere.
    pub fn record(&mut self, x: &[f64], f: f64) {
        self.evaluations += 1;
        if f < self.best_cost {
            self.best_cost = f;
            self.best_vector.copy_from_slice(x);
        }
    }

    pub fn end_iteration<P: AsRef<[f64]>>(&mut self, positions: &[P]) {
        self.history.push(self.best_cost);
        self.diversity.push(population_diversity(positions));
    }

    pub fn finish(self, algorithm: Algorithm, elapsed: Duration, params: Vec<(&'static str, f64)>) -> RunResult {
        RunResult {
            algorithm,
            best_cost: self.best_cost,
            best_vector: self.best_vector,
            history: self.history,
            diversity: self.diversity,
            evaluations: self.evaluations,
            elapsed,
            params,
        }
    }
}

/// Uniform point inside the objective's box.
pub(crate) fn uniform_position<O: Objective + ?Sized, R: Rng>(obj: &O, rng: &mut R) -> Vec<f64> {
    obj.lower()
        .iter()
        .zip(obj.upper())
        .map(|(lo, hi)| lo + rng.gen::<f64>() * (hi - lo))
        .collect()
}

/// Indices of `fitness` ordered worst (largest) first; ties keep index order.
pub(crate) fn worst_first(fitness: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fitness.len()).collect();
    idx.sort_by(|&a, &b| fitness[b].total_cmp(&fitness[a]).then(a.cmp(&b)));
    idx
}

/// Indices of `fitness` ordered best (smallest) first; ties keep index order.
pub(crate) fn best_first(fitness: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fitness.len()).collect();
    idx.sort_by(|&a, &b| fitness[a].total_cmp(&fitness[b]).then(a.cmp(&b)));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_tags_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!("HGO".parse::<Algorithm>().unwrap(), Algorithm::Hgo);
        assert!(matches!("aco".parse::<Algorithm>(), Err(ConfigError::UnknownAlgorithm(_))));
    }

    #[test]
    fn orderings() {
        let f = [3.0, 1.0, 3.0, 0.5];
        assert_eq!(worst_first(&f), vec![0, 2, 1, 3]);
        assert_eq!(best_first(&f), vec![3, 1, 0, 2]);
    }
}
