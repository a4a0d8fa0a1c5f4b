//! Workspaces: bounds, start/destination, and circular obstacles.
//!
//! Four seeded generators cover the environment classes used in the
//! benchmark (open field, dense equal-radius field, maze-like walls, and a
//! mix of the last two). Scenarios are plain text on disk:
//!
//! ```text
//! # comment
//! bounds x_min y_min x_max y_max
//! start x y
//! dest x y
//! control_points n
//! obstacle x y radius [margin]
//! ```

use std::collections::VecDeque;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{polyline_violation, CircleObstacle, Point2};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },
    #[error("could not generate a valid {case} scenario for seed {seed} after {attempts} attempts")]
    Generation { case: Case, seed: u64, attempts: usize },
    #[error("unknown scenario case `{0}`")]
    UnknownCase(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid { field: field.into(), message: message.into() }
}

/// A validated planning workspace. Immutable once constructed.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    name: String,
    lower: Point2,
    upper: Point2,
    start: Point2,
    destination: Point2,
    obstacles: Vec<CircleObstacle>,
    num_control_points: usize,
}

impl Scenario {
    pub fn new(
        name: impl Into<String>,
        lower: Point2,
        upper: Point2,
        start: Point2,
        destination: Point2,
        obstacles: Vec<CircleObstacle>,
        num_control_points: usize,
    ) -> Result<Self, ScenarioError> {
        let s = Self {
            name: name.into(),
            lower,
            upper,
            start,
            destination,
            obstacles,
            num_control_points,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<(), ScenarioError> {
        if !self.lower.is_finite() || !self.upper.is_finite() {
            return Err(invalid("bounds", "coordinates must be finite"));
        }
        if !(self.lower.x < self.upper.x && self.lower.y < self.upper.y) {
            return Err(invalid("bounds", "lower bound must be below upper bound on both axes"));
        }
        if self.num_control_points == 0 {
            return Err(invalid("control_points", "at least one control point is required"));
        }
        for (i, o) in self.obstacles.iter().enumerate() {
            if !o.center.is_finite() {
                return Err(invalid(format!("obstacle[{i}].center"), "must be finite"));
            }
            if !(o.radius.is_finite() && o.radius > 0.0) {
                return Err(invalid(format!("obstacle[{i}].radius"), format!("must be positive, got {}", o.radius)));
            }
            if !(o.safety_margin.is_finite() && o.safety_margin >= 0.0) {
                return Err(invalid(
                    format!("obstacle[{i}].margin"),
                    format!("must be non-negative, got {}", o.safety_margin),
                ));
            }
        }
        for (field, p) in [("start", self.start), ("destination", self.destination)] {
            if !p.is_finite() || !self.in_bounds(p) {
                return Err(invalid(field, format!("{p} lies outside the workspace bounds")));
            }
            if let Some(i) = self.obstacles.iter().position(|o| o.contains(p)) {
                return Err(invalid(field, format!("{p} lies inside obstacle[{i}]")));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same scenario under another name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn lower(&self) -> Point2 {
        self.lower
    }

    pub fn upper(&self) -> Point2 {
        self.upper
    }

    pub fn start(&self) -> Point2 {
        self.start
    }

    pub fn destination(&self) -> Point2 {
        self.destination
    }

    pub fn obstacles(&self) -> &[CircleObstacle] {
        &self.obstacles
    }

    pub fn num_control_points(&self) -> usize {
        self.num_control_points
    }

    /// Copy of this scenario with every obstacle removed.
    pub fn without_obstacles(&self) -> Self {
        Self { obstacles: Vec::new(), ..self.clone() }
    }

    /// Copy with a different number of free waypoints.
    pub fn with_control_points(&self, n: usize) -> Result<Self, ScenarioError> {
        let s = Self { num_control_points: n, ..self.clone() };
        s.validate()?;
        Ok(s)
    }

    pub fn in_bounds(&self, p: Point2) -> bool {
        p.x >= self.lower.x && p.x <= self.upper.x && p.y >= self.lower.y && p.y <= self.upper.y
    }

    /// Serialise to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("# scenario {}\n", self.name);
        out += &format!("bounds {} {} {} {}\n", self.lower.x, self.lower.y, self.upper.x, self.upper.y);
        out += &format!("start {} {}\n", self.start.x, self.start.y);
        out += &format!("dest {} {}\n", self.destination.x, self.destination.y);
        out += &format!("control_points {}\n", self.num_control_points);
        for o in &self.obstacles {
            if o.safety_margin > 0.0 {
                out += &format!("obstacle {} {} {} {}\n", o.center.x, o.center.y, o.radius, o.safety_margin);
            } else {
                out += &format!("obstacle {} {} {}\n", o.center.x, o.center.y, o.radius);
            }
        }
        out
    }

    /// Parse the text format. Every invariant is checked.
    pub fn from_text(name: &str, text: &str) -> Result<Self, ScenarioError> {
        let mut bounds = None;
        let mut start = None;
        let mut dest = None;
        let mut control_points = None;
        let mut obstacles = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let keyword = tokens.next().unwrap_or_default();
            let args: Vec<&str> = tokens.collect();
            let parse_err = |message: String| ScenarioError::Parse { line, message };
            let nums = || -> Result<Vec<f64>, ScenarioError> {
                args.iter()
                    .map(|a| a.parse::<f64>().map_err(|_| parse_err(format!("`{a}` is not a number"))))
                    .collect()
            };
            let expect = |n: std::ops::RangeInclusive<usize>| -> Result<(), ScenarioError> {
                if n.contains(&args.len()) {
                    Ok(())
                } else {
                    Err(parse_err(format!("`{keyword}` takes {} values, got {}", n.start(), args.len())))
                }
            };
            let once = |slot_taken: bool| -> Result<(), ScenarioError> {
                if slot_taken {
                    Err(parse_err(format!("duplicate `{keyword}` line")))
                } else {
                    Ok(())
                }
            };
            match keyword {
                "bounds" => {
                    expect(4..=4)?;
                    once(bounds.is_some())?;
                    let v = nums()?;
                    bounds = Some((Point2::new(v[0], v[1]), Point2::new(v[2], v[3])));
                }
                "start" => {
                    expect(2..=2)?;
                    once(start.is_some())?;
                    let v = nums()?;
                    start = Some(Point2::new(v[0], v[1]));
                }
                "dest" => {
                    expect(2..=2)?;
                    once(dest.is_some())?;
                    let v = nums()?;
                    dest = Some(Point2::new(v[0], v[1]));
                }
                "control_points" => {
                    expect(1..=1)?;
                    once(control_points.is_some())?;
                    let n = args[0]
                        .parse::<usize>()
                        .map_err(|_| parse_err(format!("`{}` is not a non-negative integer", args[0])))?;
                    control_points = Some(n);
                }
                "obstacle" => {
                    expect(3..=4)?;
                    let v = nums()?;
                    obstacles.push(CircleObstacle::with_margin(
                        Point2::new(v[0], v[1]),
                        v[2],
                        v.get(3).copied().unwrap_or(0.0),
                    ));
                }
                other => return Err(parse_err(format!("unknown keyword `{other}`"))),
            }
        }

        let missing = |what: &str| ScenarioError::Parse {
            line: text.lines().count(),
            message: format!("missing `{what}` line"),
        };
        let (lower, upper) = bounds.ok_or_else(|| missing("bounds"))?;
        let start = start.ok_or_else(|| missing("start"))?;
        let dest = dest.ok_or_else(|| missing("dest"))?;
        let control_points = control_points.ok_or_else(|| missing("control_points"))?;
        Scenario::new(name, lower, upper, start, dest, obstacles, control_points)
    }
}

/// Load a scenario file; its name is the file stem.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("scenario");
    Scenario::from_text(name, &text)
}

pub fn save_scenario(s: &Scenario, path: impl AsRef<Path>) -> Result<(), ScenarioError> {
    fs::write(path, s.to_text())?;
    Ok(())
}

/// Built-in environment classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// Few obstacles of assorted radii scattered over the field.
    Ambient,
    /// Many equal-radius obstacles.
    Constrict,
    /// Maze-like walls built from chains of small circles.
    Tangle,
    /// Equal-radius field plus walls.
    Complex,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Ambient, Case::Constrict, Case::Tangle, Case::Complex];

    pub fn as_str(&self) -> &'static str {
        match self {
            Case::Ambient => "ambient",
            Case::Constrict => "constrict",
            Case::Tangle => "tangle",
            Case::Complex => "complex",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Case {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Case::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ScenarioError::UnknownCase(s.to_string()))
    }
}

pub const DEFAULT_LOWER: Point2 = Point2::new(0.0, 0.0);
pub const DEFAULT_UPPER: Point2 = Point2::new(10.0, 10.0);
pub const DEFAULT_START: Point2 = Point2::new(0.5, 0.5);
pub const DEFAULT_DESTINATION: Point2 = Point2::new(9.5, 9.5);
pub const DEFAULT_CONTROL_POINTS: usize = 3;

pub const AMBIENT_COUNT: usize = 7;
pub const AMBIENT_RADII: (f64, f64) = (0.4, 1.0);
pub const CONSTRICT_COUNT: usize = 15;
pub const CONSTRICT_RADIUS: f64 = 0.5;
pub const CHAIN_LENGTH: usize = 6;
pub const CHAIN_RADIUS: f64 = 0.35;
pub const TANGLE_CHAINS: usize = 3;
pub const COMPLEX_FIELD_COUNT: usize = 10;
pub const COMPLEX_CHAINS: usize = 2;

/// Spacing between circle centres inside a wall; below `2 * CHAIN_RADIUS` so
/// neighbours overlap and leave no gap.
const CHAIN_SPACING: f64 = 0.6;
/// Minimum clearance between an obstacle boundary and the start/destination.
const ENDPOINT_CLEARANCE: f64 = 0.25;
const MAX_LAYOUT_ATTEMPTS: usize = 200;
const MAX_PLACEMENT_ATTEMPTS: usize = 1000;
const ROUTE_CELL: f64 = 0.05;

/// Deterministic scenario for a case and seed.
pub fn builtin_scenario(case: Case, seed: u64) -> Result<Scenario, ScenarioError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_LAYOUT_ATTEMPTS {
        let obstacles = match case {
            Case::Ambient => scattered(&mut rng, AMBIENT_COUNT, AMBIENT_RADII),
            Case::Constrict => scattered(&mut rng, CONSTRICT_COUNT, (CONSTRICT_RADIUS, CONSTRICT_RADIUS)),
            Case::Tangle => walls(&mut rng, TANGLE_CHAINS),
            Case::Complex => scattered(&mut rng, COMPLEX_FIELD_COUNT, (CONSTRICT_RADIUS, CONSTRICT_RADIUS))
                .zip(walls(&mut rng, COMPLEX_CHAINS))
                .map(|(mut field, chains)| {
                    field.extend(chains);
                    field
                }),
        };
        let Some(obstacles) = obstacles else { continue };
        let scenario = Scenario::new(
            case.as_str(),
            DEFAULT_LOWER,
            DEFAULT_UPPER,
            DEFAULT_START,
            DEFAULT_DESTINATION,
            obstacles,
            DEFAULT_CONTROL_POINTS,
        );
        if let Ok(s) = scenario {
            if clear_route(&s).is_some() {
                return Ok(s);
            }
        }
    }
    Err(ScenarioError::Generation { case, seed, attempts: MAX_LAYOUT_ATTEMPTS })
}

fn endpoint_clear(o: &CircleObstacle) -> bool {
    [DEFAULT_START, DEFAULT_DESTINATION]
        .iter()
        .all(|&p| crate::geometry::distance(o.center, p) > o.effective_radius() + ENDPOINT_CLEARANCE)
}

/// Obstacles with uniform centres over the interior of the field.
fn scattered(rng: &mut ChaCha8Rng, count: usize, radii: (f64, f64)) -> Option<Vec<CircleObstacle>> {
    let (lo, hi) = (1.5, 8.5);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let placed = (0..MAX_PLACEMENT_ATTEMPTS).find_map(|_| {
            let r = if radii.0 < radii.1 { rng.gen_range(radii.0..radii.1) } else { radii.0 };
            let c = Point2::new(rng.gen_range(lo..hi), rng.gen_range(lo..hi));
            let o = CircleObstacle::new(c, r);
            endpoint_clear(&o).then_some(o)
        })?;
        out.push(placed);
    }
    Some(out)
}

/// Walls laid across the start-destination diagonal at evenly spaced
/// stations, each protruding to alternating sides so a direct route has to
/// weave between them.
fn walls(rng: &mut ChaCha8Rng, chains: usize) -> Option<Vec<CircleObstacle>> {
    let dir = Point2::new(
        DEFAULT_DESTINATION.x - DEFAULT_START.x,
        DEFAULT_DESTINATION.y - DEFAULT_START.y,
    );
    let len = dir.x.hypot(dir.y);
    // unit normal to the diagonal
    let normal = Point2::new(dir.y / len, -dir.x / len);
    let mut side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let mut out = Vec::with_capacity(chains * CHAIN_LENGTH);
    for k in 0..chains {
        let station = (k + 1) as f64 / (chains + 1) as f64 + rng.gen_range(-0.04..0.04);
        let anchor = DEFAULT_START.lerp(DEFAULT_DESTINATION, station);
        let first = -1.5 * CHAIN_SPACING + rng.gen_range(-0.1..0.1);
        for j in 0..CHAIN_LENGTH {
            let offset = side * (first + j as f64 * CHAIN_SPACING);
            let c = Point2::new(anchor.x + offset * normal.x, anchor.y + offset * normal.y);
            let o = CircleObstacle::new(c, CHAIN_RADIUS);
            if !endpoint_clear(&o) {
                return None;
            }
            out.push(o);
        }
        side = -side;
    }
    Some(out)
}

/// Finds a collision-free polyline from start to destination on a fine grid,
/// or `None` when the obstacles disconnect the two.
///
/// Grid cells are kept only when their centre clears every inflated disk by
/// half a cell diagonal, so any polyline through adjacent free cells is clear.
/// The returned route is re-checked with the exact segment test.
pub fn clear_route(s: &Scenario) -> Option<Vec<Point2>> {
    let nx = ((s.upper.x - s.lower.x) / ROUTE_CELL).ceil() as usize;
    let ny = ((s.upper.y - s.lower.y) / ROUTE_CELL).ceil() as usize;
    let cx = (s.upper.x - s.lower.x) / nx as f64;
    let cy = (s.upper.y - s.lower.y) / ny as f64;
    let slack = 0.5 * cx.hypot(cy);
    let center = |i: usize, j: usize| Point2::new(s.lower.x + (i as f64 + 0.5) * cx, s.lower.y + (j as f64 + 0.5) * cy);
    let free: Vec<bool> = (0..nx * ny)
        .map(|k| {
            let p = center(k % nx, k / nx);
            s.obstacles
                .iter()
                .all(|o| crate::geometry::distance(o.center, p) > o.effective_radius() + slack)
        })
        .collect();

    let cell_of = |p: Point2| {
        let i = (((p.x - s.lower.x) / cx) as usize).min(nx - 1);
        let j = (((p.y - s.lower.y) / cy) as usize).min(ny - 1);
        j * nx + i
    };
    let clear = |a: Point2, b: Point2| polyline_violation(&[a, b], &s.obstacles) == 0.0;
    let src = cell_of(s.start);
    let dst = cell_of(s.destination);
    if !free[src] || !free[dst] {
        return None;
    }
    if !clear(s.start, center(src % nx, src / nx)) || !clear(center(dst % nx, dst / nx), s.destination) {
        return None;
    }

    let mut prev = vec![usize::MAX; nx * ny];
    prev[src] = src;
    let mut queue = VecDeque::from([src]);
    while let Some(k) = queue.pop_front() {
        if k == dst {
            break;
        }
        let (i, j) = ((k % nx) as isize, (k / nx) as isize);
        for (di, dj) in [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (-1, 1), (1, -1), (1, 1)] {
            let (ni, nj) = (i + di, j + dj);
            if ni < 0 || nj < 0 || ni >= nx as isize || nj >= ny as isize {
                continue;
            }
            let n = nj as usize * nx + ni as usize;
            if free[n] && prev[n] == usize::MAX {
                prev[n] = k;
                queue.push_back(n);
            }
        }
    }
    if prev[dst] == usize::MAX {
        return None;
    }
    let mut cells = vec![dst];
    while *cells.last().unwrap() != src {
        cells.push(prev[*cells.last().unwrap()]);
    }
    cells.reverse();
    let mut route = Vec::with_capacity(cells.len() + 2);
    route.push(s.start);
    route.extend(cells.into_iter().map(|k| center(k % nx, k / nx)));
    route.push(s.destination);
    (polyline_violation(&route, &s.obstacles) == 0.0).then_some(route)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_is_deterministic() {
        for case in Case::ALL {
            let a = builtin_scenario(case, 42).unwrap();
            let b = builtin_scenario(case, 42).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.to_text(), b.to_text());
        }
        assert_ne!(builtin_scenario(Case::Ambient, 1).unwrap(), builtin_scenario(Case::Ambient, 2).unwrap());
    }

    #[test]
    fn builtin_obstacle_counts_and_radii() {
        for seed in 0..20 {
            let amb = builtin_scenario(Case::Ambient, seed).unwrap();
            assert_eq!(amb.obstacles().len(), AMBIENT_COUNT);
            assert!(amb.obstacles().iter().all(|o| (0.4..=1.0).contains(&o.radius)));

            let con = builtin_scenario(Case::Constrict, seed).unwrap();
            assert_eq!(con.obstacles().len(), CONSTRICT_COUNT);
            let r0 = con.obstacles()[0].radius;
            assert!(con.obstacles().iter().all(|o| o.radius == r0));

            let tan = builtin_scenario(Case::Tangle, seed).unwrap();
            assert_eq!(tan.obstacles().len(), TANGLE_CHAINS * CHAIN_LENGTH);

            let cpx = builtin_scenario(Case::Complex, seed).unwrap();
            assert_eq!(cpx.obstacles().len(), COMPLEX_FIELD_COUNT + COMPLEX_CHAINS * CHAIN_LENGTH);
            let (field, chains) = cpx.obstacles().split_at(COMPLEX_FIELD_COUNT);
            assert!(field.iter().all(|o| o.radius == CONSTRICT_RADIUS));
            assert!(chains.iter().all(|o| o.radius == CHAIN_RADIUS));
        }
    }

    #[test]
    fn builtins_are_valid_and_passable() {
        for case in Case::ALL {
            for seed in 0..10 {
                let s = builtin_scenario(case, seed).unwrap();
                assert!(s.validate().is_ok());
                let route = clear_route(&s).expect("route");
                assert_eq!(polyline_violation(&route, s.obstacles()), 0.0);
            }
        }
    }

    #[test]
    fn blocked_workspace_has_no_route() {
        let wall: Vec<_> = (0..=20)
            .map(|i| CircleObstacle::new(Point2::new(5.0, i as f64 * 0.5), 0.4))
            .collect();
        let s = Scenario::new("wall", DEFAULT_LOWER, DEFAULT_UPPER, DEFAULT_START, DEFAULT_DESTINATION, wall, 1)
            .unwrap();
        assert!(clear_route(&s).is_none());
    }

    #[test]
    fn round_trip_text() {
        for case in Case::ALL {
            let s = builtin_scenario(case, 7).unwrap();
            let back = Scenario::from_text(s.name(), &s.to_text()).unwrap();
            assert_eq!(s, back);
        }
        let with_margin = Scenario::new(
            "m",
            DEFAULT_LOWER,
            DEFAULT_UPPER,
            DEFAULT_START,
            DEFAULT_DESTINATION,
            vec![CircleObstacle::with_margin(Point2::new(5.0, 5.0), 1.0, 0.125)],
            2,
        )
        .unwrap();
        assert_eq!(Scenario::from_text("m", &with_margin.to_text()).unwrap(), with_margin);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "bounds 0 0 10 10\nstart 1 1\ndest nine 9\ncontrol_points 3\n";
        match Scenario::from_text("x", text) {
            Err(ScenarioError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let text = "bounds 0 0 10 10\nstart 1 1\ndest 9 9\ncontrol_points 3\nwaypoint 2 2\n";
        assert!(matches!(Scenario::from_text("x", text), Err(ScenarioError::Parse { line: 5, .. })));
        let text = "bounds 0 0 10 10\nstart 1 1\ncontrol_points 3\n";
        assert!(matches!(Scenario::from_text("x", text), Err(ScenarioError::Parse { .. })));
    }

    #[test]
    fn invariant_errors_name_the_field() {
        let base = "bounds 0 0 10 10\nstart 1 1\ndest 9 9\ncontrol_points 3\n";
        let err = Scenario::from_text("x", &format!("{base}obstacle 5 5 0\n")).unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "obstacle[0].radius"));
        let err = Scenario::from_text("x", &format!("{base}obstacle 5 5 -1\n")).unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "obstacle[0].radius"));

        let err = Scenario::from_text("x", &format!("{base}obstacle 1.2 1 0.5\n")).unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "start"));

        let err = Scenario::from_text("x", "bounds 0 0 10 10\nstart 1 1\ndest 9 9\ncontrol_points 0\n").unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "control_points"));

        let err = Scenario::from_text("x", "bounds 10 0 0 10\nstart 1 1\ndest 9 9\ncontrol_points 1\n").unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "bounds"));

        let err = Scenario::from_text("x", "bounds 0 0 10 10\nstart 1 1\ndest 19 9\ncontrol_points 1\n").unwrap_err();
        assert!(matches!(&err, ScenarioError::Invalid { field, .. } if field == "destination"));
    }

    #[test]
    fn case_names_parse() {
        for case in Case::ALL {
            assert_eq!(case.as_str().parse::<Case>().unwrap(), case);
        }
        assert!("forest".parse::<Case>().is_err());
    }
}
