//! Planar primitives: points, segments, circular obstacles, and the
//! path/obstacle interference measure used by the trajectory cost.
//!
//! All lengths are in kilometres.

use std::fmt;

/// A point in the workspace plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Linear interpolation, `t = 0` gives `self`, `t = 1` gives `other`.
    pub fn lerp(&self, other: Point2, t: f64) -> Point2 {
        Point2::new(self.x + t * (other.x - self.x), self.y + t * (other.y - self.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Euclidean distance between two points.
pub fn distance(p: Point2, q: Point2) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Directed line segment; zero-length segments are allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub const fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn length(&self) -> f64 {
        distance(self.a, self.b)
    }

    /// Point on the segment closest to `p` (projection clamped to `[0, 1]`).
    pub fn closest_point(&self, p: Point2) -> Point2 {
        let dx = self.b.x - self.a.x;
        let dy = self.b.y - self.a.y;
        let len2 = dx * dx + dy * dy;
        if len2 == 0.0 {
            return self.a;
        }
        let t = (((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / len2).clamp(0.0, 1.0);
        self.a.lerp(self.b, t)
    }

    /// Minimum distance from any point of the segment to `p`.
    pub fn distance_to(&self, p: Point2) -> f64 {
        distance(self.closest_point(p), p)
    }
}

/// Circular no-fly region, optionally inflated by a safety margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleObstacle {
    pub center: Point2,
    pub radius: f64,
    pub safety_margin: f64,
}

impl CircleObstacle {
    pub const fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius, safety_margin: 0.0 }
    }

    pub const fn with_margin(center: Point2, radius: f64, safety_margin: f64) -> Self {
        Self { center, radius, safety_margin }
    }

    /// Radius of the inflated disk.
    pub fn effective_radius(&self) -> f64 {
        self.radius + self.safety_margin
    }

    /// True when `p` lies strictly inside the inflated disk.
    pub fn contains(&self, p: Point2) -> bool {
        distance(self.center, p) < self.effective_radius()
    }

    pub fn is_valid(&self) -> bool {
        self.center.is_finite()
            && self.radius.is_finite()
            && self.safety_margin.is_finite()
            && self.radius > 0.0
            && self.safety_margin >= 0.0
    }
}

/// Depth by which a segment enters an obstacle's inflated disk.
///
/// Zero when the segment stays outside or only touches the boundary.
pub fn segment_circle_penetration(s: &Segment, o: &CircleObstacle) -> f64 {
    (o.effective_radius() - s.distance_to(o.center)).max(0.0)
}

/// Total penetration of a polyline into a set of obstacles, summed over every
/// (segment, obstacle) pair.
pub fn polyline_violation(waypoints: &[Point2], obstacles: &[CircleObstacle]) -> f64 {
    waypoints
        .windows(2)
        .map(|w| {
            let seg = Segment::new(w[0], w[1]);
            obstacles
                .iter()
                .map(|o| segment_circle_penetration(&seg, o))
                .sum::<f64>()
        })
        .sum()
}

/// Sum of segment lengths along a polyline.
pub fn polyline_length(waypoints: &[Point2]) -> f64 {
    waypoints.windows(2).map(|w| distance(w[0], w[1])).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn depth_at(s: &Segment, o: &CircleObstacle, t: f64) -> f64 {
        let q = s.a.lerp(s.b, t);
        o.effective_radius() - ((q.x - o.center.x).powi(2) + (q.y - o.center.y).powi(2)).sqrt()
    }

    /// Brute-force penetration: sample the segment densely, then resample
    /// densely between the neighbours of the deepest sample.
    fn sampled_penetration(s: &Segment, o: &CircleObstacle, samples: usize) -> f64 {
        let n = samples as f64;
        let coarse = (0..=samples)
            .map(|i| (i, depth_at(s, o, i as f64 / n)))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        let lo = (coarse.0.saturating_sub(1)) as f64 / n;
        let hi = ((coarse.0 + 1).min(samples)) as f64 / n;
        let fine = (0..=samples)
            .map(|i| depth_at(s, o, lo + (hi - lo) * i as f64 / n))
            .fold(coarse.1, f64::max);
        fine.max(0.0)
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(p(0.0, 0.0), p(3.0, 4.0)), 5.0);
        assert_eq!(distance(p(2.0, 2.0), p(2.0, 2.0)), 0.0);
        // (4-1, 5-1) = (3, 4)
        let d = distance(p(1.0, 1.0), p(4.0, 5.0));
        let manual = ((4.0f64 - 1.0).powi(2) + (5.0f64 - 1.0).powi(2)).sqrt();
        assert_eq!(d, 5.0);
        assert_eq!(d, manual);
    }

    #[test]
    fn penetration_examples() {
        let unit = CircleObstacle::new(p(0.0, 0.0), 1.0);
        let through = Segment::new(p(-2.0, 0.0), p(2.0, 0.0));
        assert_eq!(segment_circle_penetration(&through, &unit), 1.0);

        let far = Segment::new(p(-2.0, 5.0), p(2.0, 5.0));
        assert_eq!(segment_circle_penetration(&far, &unit), 0.0);

        let offset = Segment::new(p(-2.0, 0.5), p(2.0, 0.5));
        let exact = segment_circle_penetration(&offset, &unit);
        assert_abs_diff_eq!(exact, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(exact, sampled_penetration(&offset, &unit, 10_000), epsilon = 1e-6);
    }

    #[test]
    fn tangent_contact_is_clear() {
        let unit = CircleObstacle::new(p(0.0, 0.0), 1.0);
        let tangent = Segment::new(p(-2.0, 1.0), p(2.0, 1.0));
        assert_eq!(segment_circle_penetration(&tangent, &unit), 0.0);
    }

    #[test]
    fn margin_inflates_disk() {
        let o = CircleObstacle::with_margin(p(0.0, 0.0), 1.0, 0.25);
        let s = Segment::new(p(-2.0, 1.0), p(2.0, 1.0));
        assert_abs_diff_eq!(segment_circle_penetration(&s, &o), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn zero_length_segment() {
        let o = CircleObstacle::new(p(0.0, 0.0), 1.0);
        let s = Segment::new(p(0.5, 0.0), p(0.5, 0.0));
        assert_abs_diff_eq!(segment_circle_penetration(&s, &o), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn violation_sums_over_obstacles() {
        let path = [p(0.0, 0.0), p(10.0, 0.0)];
        assert_eq!(polyline_violation(&path, &[]), 0.0);

        let a = CircleObstacle::new(p(3.0, 0.0), 1.0);
        let b = CircleObstacle::new(p(7.0, 0.2), 0.5);
        let seg = Segment::new(path[0], path[1]);
        let expected = sampled_penetration(&seg, &a, 10_000) + sampled_penetration(&seg, &b, 10_000);
        assert_abs_diff_eq!(polyline_violation(&path, &[a, b]), expected, epsilon = 1e-6);
        assert_abs_diff_eq!(polyline_violation(&path, &[a, b]), 1.0 + 0.3, epsilon = 1e-12);

        let clear = [p(0.0, 5.0), p(10.0, 5.0)];
        assert_eq!(polyline_violation(&clear, &[a, b]), 0.0);
    }

    fn coord() -> impl Strategy<Value = f64> {
        -10.0..10.0f64
    }

    fn point() -> impl Strategy<Value = Point2> {
        (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
    }

    proptest! {
        #[test]
        fn triangle_inequality(a in point(), b in point(), c in point()) {
            prop_assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
            prop_assert_eq!(distance(a, b), distance(b, a));
        }

        #[test]
        fn penetration_monotone_in_radius(a in point(), b in point(), c in point(), r in 0.01..5.0f64, dr in 0.0..2.0f64) {
            let s = Segment::new(a, b);
            let small = segment_circle_penetration(&s, &CircleObstacle::new(c, r));
            let large = segment_circle_penetration(&s, &CircleObstacle::new(c, r + dr));
            prop_assert!(large >= small);
        }

        #[test]
        fn violation_reversal_invariant(
            pts in prop::collection::vec(point(), 2..6),
            obs in prop::collection::vec((point(), 0.1..3.0f64), 0..5),
        ) {
            let obstacles: Vec<_> = obs.into_iter().map(|(c, r)| CircleObstacle::new(c, r)).collect();
            let mut rev = pts.clone();
            rev.reverse();
            let fwd = polyline_violation(&pts, &obstacles);
            let bwd = polyline_violation(&rev, &obstacles);
            prop_assert!((fwd - bwd).abs() <= 1e-9 * (1.0 + fwd));
        }

        #[test]
        fn penetration_matches_sampling(a in point(), b in point(), c in point(), r in 0.1..4.0f64) {
            let s = Segment::new(a, b);
            let o = CircleObstacle::new(c, r);
            let exact = segment_circle_penetration(&s, &o);
            let sampled = sampled_penetration(&s, &o, 10_000);
            prop_assert!(sampled <= exact + 1e-12);
            prop_assert!(exact - sampled <= 1e-6);
        }
    }
}
