//! Decision-vector encoding of trajectories and the penalised path-length
//! cost that every optimizer minimises.

use thiserror::Error;

use crate::geometry::{polyline_length, polyline_violation, CircleObstacle, Point2};
use crate::scenario::Scenario;

/// Default cost added per kilometre of obstacle penetration.
pub const DEFAULT_PENALTY_WEIGHT: f64 = 100.0;

#[derive(Debug, Error, PartialEq)]
pub enum ObjectiveError {
    #[error("decision vector has {got} values, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// A box-bounded black-box minimisation problem.
pub trait Objective: Sync {
    fn lower(&self) -> &[f64];
    fn upper(&self) -> &[f64];
    fn cost(&self, x: &[f64]) -> f64;

    fn dim(&self) -> usize {
        self.lower().len()
    }

    /// Clamp every coordinate of `x` into its bound interval.
    fn clamp(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(self.lower()).zip(self.upper()) {
            *v = v.clamp(*lo, *hi);
        }
    }

    fn in_bounds(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower())
                .zip(self.upper())
                .all(|((v, lo), hi)| *v >= *lo && *v <= *hi)
    }
}

/// Start, free control points, destination.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub start: Point2,
    pub control_points: Vec<Point2>,
    pub destination: Point2,
}

impl Trajectory {
    /// All waypoints in flight order.
    pub fn waypoints(&self) -> Vec<Point2> {
        let mut w = Vec::with_capacity(self.control_points.len() + 2);
        w.push(self.start);
        w.extend_from_slice(&self.control_points);
        w.push(self.destination);
        w
    }

    pub fn length(&self) -> f64 {
        polyline_length(&self.waypoints())
    }

    /// Flatten the control points into `[x1, y1, x2, y2, ...]`.
    pub fn encode(&self) -> Vec<f64> {
        self.control_points.iter().flat_map(|p| [p.x, p.y]).collect()
    }

    pub fn reversed(&self) -> Trajectory {
        let mut cps = self.control_points.clone();
        cps.reverse();
        Trajectory { start: self.destination, control_points: cps, destination: self.start }
    }
}

/// Summed penetration of every trajectory segment into every obstacle.
pub fn trajectory_violation(t: &Trajectory, obstacles: &[CircleObstacle]) -> f64 {
    polyline_violation(&t.waypoints(), obstacles)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostBreakdown {
    pub path_length: f64,
    pub violation: f64,
    pub total: f64,
}

/// Path-length cost with an additive obstacle-penetration penalty.
#[derive(Debug, Clone)]
pub struct PathObjective {
    scenario: Scenario,
    penalty_weight: f64,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl PathObjective {
    pub fn new(scenario: Scenario, penalty_weight: f64) -> Self {
        let n = scenario.num_control_points();
        let (lo, hi) = (scenario.lower(), scenario.upper());
        Self {
            lower: (0..n).flat_map(|_| [lo.x, lo.y]).collect(),
            upper: (0..n).flat_map(|_| [hi.x, hi.y]).collect(),
            scenario,
            penalty_weight,
        }
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn penalty_weight(&self) -> f64 {
        self.penalty_weight
    }

    /// Map a decision vector onto a trajectory, clamping coordinates to the
    /// workspace first.
    pub fn decode(&self, v: &[f64]) -> Result<Trajectory, ObjectiveError> {
        let expected = 2 * self.scenario.num_control_points();
        if v.len() != expected {
            return Err(ObjectiveError::LengthMismatch { expected, got: v.len() });
        }
        let (lo, hi) = (self.scenario.lower(), self.scenario.upper());
        let control_points = v
            .chunks_exact(2)
            .map(|c| Point2::new(c[0].clamp(lo.x, hi.x), c[1].clamp(lo.y, hi.y)))
            .collect();
        Ok(Trajectory {
            start: self.scenario.start(),
            control_points,
            destination: self.scenario.destination(),
        })
    }

    pub fn evaluate(&self, v: &[f64]) -> Result<CostBreakdown, ObjectiveError> {
        let t = self.decode(v)?;
        let waypoints = t.waypoints();
        let path_length = polyline_length(&waypoints);
        let violation = polyline_violation(&waypoints, self.scenario.obstacles());
        let total = path_length + self.penalty_weight * violation;
        Ok(CostBreakdown { path_length, violation, total })
    }
}

impl Objective for PathObjective {
    fn lower(&self) -> &[f64] {
        &self.lower
    }

    fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Total cost; vectors of the wrong length cost `+inf`.
    fn cost(&self, x: &[f64]) -> f64 {
        self.evaluate(x).map(|c| c.total).unwrap_or(f64::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::distance;
    use crate::scenario::{builtin_scenario, Case};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn open_field(start: Point2, dest: Point2, n: usize, obstacles: Vec<CircleObstacle>) -> Scenario {
        Scenario::new("t", Point2::new(0.0, 0.0), Point2::new(10.0, 10.0), start, dest, obstacles, n).unwrap()
    }

    #[test]
    fn decode_maps_and_clamps() {
        let obj = PathObjective::new(open_field(Point2::new(0.5, 0.5), Point2::new(9.5, 9.5), 1, vec![]), 100.0);
        let t = obj.decode(&[5.0, 5.0]).unwrap();
        assert_eq!(t.waypoints(), vec![Point2::new(0.5, 0.5), Point2::new(5.0, 5.0), Point2::new(9.5, 9.5)]);

        let t = obj.decode(&[11.2, -3.0]).unwrap();
        assert_eq!(t.control_points, vec![Point2::new(10.0, 0.0)]);

        assert_eq!(
            obj.decode(&[1.0, 2.0, 3.0]),
            Err(ObjectiveError::LengthMismatch { expected: 2, got: 3 })
        );
        assert_eq!(obj.cost(&[1.0]), f64::INFINITY);
    }

    #[test]
    fn decode_encode_round_trip() {
        let s = builtin_scenario(Case::Ambient, 3).unwrap();
        let obj = PathObjective::new(s, 100.0);
        let t = Trajectory {
            start: obj.scenario().start(),
            control_points: vec![Point2::new(1.0, 2.0), Point2::new(3.5, 4.25), Point2::new(9.0, 0.0)],
            destination: obj.scenario().destination(),
        };
        assert_eq!(obj.decode(&t.encode()).unwrap(), t);
    }

    #[test]
    fn collinear_points_cost_straight_line() {
        let (s, d) = (Point2::new(0.5, 0.5), Point2::new(9.5, 9.5));
        let obj = PathObjective::new(open_field(s, d, 3, vec![]), 100.0);
        let c = obj.evaluate(&[2.0, 2.0, 5.0, 5.0, 7.0, 7.0]).unwrap();
        assert_abs_diff_eq!(c.total, distance(s, d), epsilon = 1e-12);
        assert_eq!(c.violation, 0.0);
    }

    #[test]
    fn dogleg_345() {
        let obj = PathObjective::new(open_field(Point2::new(0.0, 0.0), Point2::new(6.0, 0.0), 1, vec![]), 100.0);
        let c = obj.evaluate(&[3.0, 4.0]).unwrap();
        let oracle = distance(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0))
            + distance(Point2::new(3.0, 4.0), Point2::new(6.0, 0.0));
        assert_eq!(c.path_length, 10.0);
        assert_eq!(c.path_length, oracle);
        assert_eq!(c.violation, 0.0);
        assert_eq!(c.total, 10.0);
    }

    #[test]
    fn central_pass_through_circle() {
        let obs = vec![CircleObstacle::new(Point2::new(5.0, 1.0), 1.0)];
        let obj = PathObjective::new(open_field(Point2::new(1.0, 1.0), Point2::new(9.0, 1.0), 1, obs), 100.0);
        let c = obj.evaluate(&[3.0, 1.0]).unwrap();
        assert_abs_diff_eq!(c.violation, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.total, c.path_length + 100.0, epsilon = 1e-9);
    }

    #[test]
    fn grid_optimum_on_open_field_is_straight_line() {
        let (s, d) = (Point2::new(0.5, 0.5), Point2::new(9.5, 9.5));
        let obj = PathObjective::new(open_field(s, d, 1, vec![]), 100.0);
        let mut best = (f64::INFINITY, 0.0, 0.0);
        for i in 0..=20 {
            for j in 0..=20 {
                let (x, y) = (i as f64 * 0.5, j as f64 * 0.5);
                let c = obj.cost(&[x, y]);
                if c < best.0 {
                    best = (c, x, y);
                }
            }
        }
        // on-diagonal grid points hit the straight line exactly
        assert_abs_diff_eq!(best.0, distance(s, d), epsilon = 1e-9);
        assert_eq!(best.1, best.2);
    }

    fn vec6() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.0..10.0f64, 6)
    }

    proptest! {
        #[test]
        fn removing_obstacles_never_increases_cost(v in vec6(), seed in 0u64..50) {
            let s = builtin_scenario(Case::Constrict, seed).unwrap();
            let with = PathObjective::new(s.clone(), 100.0).cost(&v);
            let without = PathObjective::new(s.without_obstacles(), 100.0).cost(&v);
            prop_assert!(without <= with);
        }

        #[test]
        fn breakdown_invariants(v in vec6(), seed in 0u64..50) {
            let obj = PathObjective::new(builtin_scenario(Case::Complex, seed).unwrap(), 100.0);
            let c = obj.evaluate(&v).unwrap();
            prop_assert_eq!(obj.evaluate(&v).unwrap(), c);
            let straight = distance(obj.scenario().start(), obj.scenario().destination());
            prop_assert!(c.path_length >= straight - 1e-12);
            if c.violation == 0.0 {
                prop_assert_eq!(c.total, c.path_length);
            } else {
                prop_assert!((c.total - (c.path_length + 100.0 * c.violation)).abs() <= 1e-9 * c.total);
            }
        }

        #[test]
        fn violation_invariant_under_reversal(v in vec6(), seed in 0u64..50) {
            let obj = PathObjective::new(builtin_scenario(Case::Tangle, seed).unwrap(), 100.0);
            let t = obj.decode(&v).unwrap();
            let fwd = trajectory_violation(&t, obj.scenario().obstacles());
            let bwd = trajectory_violation(&t.reversed(), obj.scenario().obstacles());
            prop_assert!((fwd - bwd).abs() <= 1e-9 * (1.0 + fwd));
        }
    }
}
