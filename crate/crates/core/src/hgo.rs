//! Henry gas optimization.
//!
//! The population is split into clusters; every cluster shares one Henry
//! coefficient that decays with a temperature schedule. Each agent carries a
//! per-dimension partial pressure, and the product of the two (the
//! solubility) scales the attraction towards the swarm-best position. Every
//! iteration a random 10-20 % of the worst agents are re-drawn uniformly.

use std::ops::Range;
use std::time::Instant;

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::objective::Objective;
use crate::optim::{uniform_position, worst_first, Algorithm, ConfigError, RunResult, Tracker};

#[derive(Debug, Clone, PartialEq)]
pub struct HgoConfig {
    pub population: usize,
    pub iterations: usize,
    pub clusters: usize,
    /// Scale of the initial Henry coefficients.
    pub o1: f64,
    /// Scale of the initial partial pressures.
    pub o2: f64,
    /// Scale of the per-cluster decay constants.
    pub o3: f64,
    /// Reference temperature of the decay schedule.
    pub k_theta: f64,
    pub epsilon: f64,
    /// Weight of the swarm-best attraction.
    pub beta: f64,
    /// Weight of the cluster-best attraction.
    pub omega: f64,
    /// Solubility proportionality constant.
    pub solubility_const: f64,
    /// Lower fraction of the population re-drawn each iteration.
    pub a1: f64,
    /// Upper fraction of the population re-drawn each iteration.
    pub a2: f64,
    pub seed: u64,
}

impl Default for HgoConfig {
    fn default() -> Self {
        Self {
            population: 100,
            iterations: 100,
            clusters: 5,
            o1: 1.0,
            o2: 10.0,
            o3: 1.0,
            k_theta: 298.15,
            epsilon: 0.05,
            beta: 1.0,
            omega: 1.0,
            solubility_const: 1.0,
            a1: 0.1,
            a2: 0.2,
            seed: 0,
        }
    }
}

impl HgoConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.clusters == 0 || self.population < self.clusters {
            return bad("need population >= clusters >= 1");
        }
        if self.iterations == 0 {
            return bad("need iterations >= 1");
        }
        let constants = [
            self.o1,
            self.o2,
            self.o3,
            self.k_theta,
            self.epsilon,
            self.beta,
            self.omega,
            self.solubility_const,
            self.a1,
            self.a2,
        ];
        if constants.iter().any(|c| !c.is_finite()) {
            return bad("all constants must be finite");
        }
        if self.o1 <= 0.0 || self.o3 <= 0.0 || self.k_theta <= 0.0 {
            return bad("o1, o3 and k_theta must be positive");
        }
        if !(0.0 <= self.a1 && self.a1 < self.a2 && self.a2 <= 1.0) {
            return bad("need 0 <= a1 < a2 <= 1");
        }
        Ok(())
    }

    pub fn params(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("population", self.population as f64),
            ("iterations", self.iterations as f64),
            ("clusters", self.clusters as f64),
            ("o1", self.o1),
            ("o2", self.o2),
            ("o3", self.o3),
            ("k_theta", self.k_theta),
            ("epsilon", self.epsilon),
            ("beta", self.beta),
            ("omega", self.omega),
            ("const", self.solubility_const),
            ("a1", self.a1),
            ("a2", self.a2),
        ]
    }
}

/// One search agent.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    pub position: Vec<f64>,
    /// Per-dimension partial pressure, fixed after initialisation.
    pub pressure: Vec<f64>,
    /// Per-dimension solubility from the latest Henry update.
    pub solubility: Vec<f64>,
    pub fitness: f64,
    pub cluster: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub henry: f64,
    /// Decay constant of the Henry coefficient.
    pub decay: f64,
    /// Index of the fittest current member.
    pub best: usize,
    pub members: Range<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Swarm {
    pub agents: Vec<Agent>,
    pub clusters: Vec<Cluster>,
}

impl Swarm {
    /// Point each cluster at its fittest current member (lowest index on ties).
    pub fn refresh_cluster_bests(&mut self) {
        for c in &mut self.clusters {
            c.best = c
                .members
                .clone()
                .min_by(|&a, &b| self.agents[a].fitness.total_cmp(&self.agents[b].fitness))
                .expect("clusters are never empty");
        }
    }

    pub fn positions(&self) -> Vec<&[f64]> {
        self.agents.iter().map(|a| a.position.as_slice()).collect()
    }
}

/// Split `n` indices into `k` contiguous groups whose sizes differ by at most one.
pub fn partition(n: usize, k: usize) -> Vec<Range<usize>> {
    (0..k).map(|q| (q * n / k)..((q + 1) * n / k)).collect()
}

fn open01<R: Rng>(rng: &mut R) -> f64 {
    rng.sample(Open01)
}

/// Draw the initial population, Henry coefficients, decay constants and
/// pressures, and evaluate every agent.
pub fn initialize<O: Objective + ?Sized, R: Rng>(cfg: &HgoConfig, obj: &O, rng: &mut R) -> Swarm {
    let groups = partition(cfg.population, cfg.clusters);
    let positions: Vec<Vec<f64>> = (0..cfg.population).map(|_| uniform_position(obj, rng)).collect();
    let clusters: Vec<Cluster> = groups
        .into_iter()
        .map(|members| Cluster {
            henry: cfg.o1 * open01(rng),
            decay: cfg.o3 * open01(rng),
            best: members.start,
            members,
        })
        .collect();
    let dim = obj.dim();
    let mut agents = Vec::with_capacity(cfg.population);
    for (q, c) in clusters.iter().enumerate() {
        for i in c.members.clone() {
            let pressure: Vec<f64> = (0..dim).map(|_| cfg.o2 * open01(rng)).collect();
            let solubility = pressure
                .iter()
                .map(|&p| solubility(c.henry, p, cfg.solubility_const))
                .collect();
            let fitness = obj.cost(&positions[i]);
            agents.push(Agent { position: positions[i].clone(), pressure, solubility, fitness, cluster: q });
        }
    }
    let mut swarm = Swarm { agents, clusters };
    swarm.refresh_cluster_bests();
    swarm
}

/// Henry coefficient after iteration `t` of `max_iter`, under the schedule
/// `K(t) = exp(-t / max_iter)`.
pub fn update_henry(henry: f64, decay: f64, t: usize, max_iter: usize, k_theta: f64) -> f64 {
    let temperature = (-(t as f64) / max_iter as f64).exp();
    henry * (-decay * (1.0 / temperature - 1.0 / k_theta)).exp()
}

pub fn solubility(henry: f64, pressure: f64, constant: f64) -> f64 {
    constant * henry * pressure
}

/// Interaction weight of an agent towards its cluster best.
pub fn interaction(best_fitness: f64, fitness: f64, omega: f64, epsilon: f64) -> f64 {
    omega * (-(best_fitness + epsilon) / (fitness + epsilon)).exp()
}

/// New position for `agent`: attraction (or repulsion, depending on the
/// random direction flag) towards its cluster best and towards the
/// solubility-scaled swarm best. The result is clamped to the bounds.
pub fn update_position<O: Objective + ?Sized, R: Rng>(
    agent: &Agent,
    cluster_best: &[f64],
    swarm_best: &[f64],
    swarm_best_fitness: f64,
    cfg: &HgoConfig,
    obj: &O,
    rng: &mut R,
) -> Vec<f64> {
    let alpha = interaction(swarm_best_fitness, agent.fitness, cfg.omega, cfg.epsilon);
    let flag = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let mut next: Vec<f64> = agent
        .position
        .iter()
        .enumerate()
        .map(|(d, &u)| {
            let r1: f64 = rng.gen();
            let r2: f64 = rng.gen();
            u + flag * r1 * alpha * (cluster_best[d] - u)
                + flag * r2 * cfg.beta * (agent.solubility[d] * swarm_best[d] - u)
        })
        .collect();
    obj.clamp(&mut next);
    next
}

/// Number of agents to re-draw this iteration, `round(n * U(a1, a2))`.
pub fn worst_count<R: Rng>(n: usize, a1: f64, a2: f64, rng: &mut R) -> usize {
    let r: f64 = rng.gen();
    ((n as f64 * (r * (a2 - a1) + a1)).round() as usize).min(n)
}

/// Re-draw the `count` worst agents uniformly inside the bounds and
/// re-evaluate them. Returns the indices that were replaced.
pub fn respawn_worst<O: Objective + ?Sized, R: Rng>(
    agents: &mut [Agent],
    count: usize,
    obj: &O,
    rng: &mut R,
) -> Vec<usize> {
    let fitness: Vec<f64> = agents.iter().map(|a| a.fitness).collect();
    let worst: Vec<usize> = worst_first(&fitness).into_iter().take(count).collect();
    for &i in &worst {
        let a = &mut agents[i];
        a.position = uniform_position(obj, rng);
        a.fitness = obj.cost(&a.position);
    }
    worst
}

/// State exposed to observers at the end of every iteration.
#[derive(Debug)]
pub struct IterationReport<'a> {
    /// 1-based iteration index.
    pub iteration: usize,
    pub swarm: &'a Swarm,
    pub respawned: &'a [usize],
    pub best_cost: f64,
}

pub fn run<O: Objective + ?Sized>(cfg: &HgoConfig, obj: &O) -> Result<RunResult, ConfigError> {
    run_observed(cfg, obj, |_| {})
}

/// Run the optimizer, calling `observe` after every iteration.
pub fn run_observed<O, F>(cfg: &HgoConfig, obj: &O, mut observe: F) -> Result<RunResult, ConfigError>
where
    O: Objective + ?Sized,
    F: FnMut(&IterationReport<'_>),
{
    cfg.validate()?;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tracker = Tracker::new(obj.dim(), cfg.iterations);

    let mut swarm = initialize(cfg, obj, &mut rng);
    for a in &swarm.agents {
        tracker.record(&a.position, a.fitness);
    }

    for t in 1..=cfg.iterations {
        let cluster_bests: Vec<Vec<f64>> = swarm
            .clusters
            .iter()
            .map(|c| swarm.agents[c.best].position.clone())
            .collect();
        let swarm_best = tracker.best_vector.clone();
        let swarm_best_fitness = tracker.best_cost;

        let moved: Vec<Vec<f64>> = swarm
            .agents
            .iter()
            .map(|a| update_position(a, &cluster_bests[a.cluster], &swarm_best, swarm_best_fitness, cfg, obj, &mut rng))
            .collect();
        for (a, pos) in swarm.agents.iter_mut().zip(moved) {
            a.fitness = tracker.evaluate(obj, &pos);
            a.position = pos;
        }

        for c in &mut swarm.clusters {
            c.henry = update_henry(c.henry, c.decay, t, cfg.iterations, cfg.k_theta);
        }
        for a in &mut swarm.agents {
            let h = swarm.clusters[a.cluster].henry;
            for (s, &p) in a.solubility.iter_mut().zip(&a.pressure) {
                *s = solubility(h, p, cfg.solubility_const);
            }
        }

        let count = worst_count(cfg.population, cfg.a1, cfg.a2, &mut rng);
        let respawned = respawn_worst(&mut swarm.agents, count, obj, &mut rng);
        for &i in &respawned {
            let a = &swarm.agents[i];
            tracker.record(&a.position, a.fitness);
        }

        swarm.refresh_cluster_bests();
        tracker.end_iteration(&swarm.positions());
        observe(&IterationReport { iteration: t, swarm: &swarm, respawned: &respawned, best_cost: tracker.best_cost });
    }

    Ok(tracker.finish(Algorithm::Hgo, started.elapsed(), cfg.params()))
}
