//! Dimension-wise population diversity and the exploration/exploitation
//! split derived from it.

/// Per-iteration diversity with its exploration/exploitation percentages.
#[derive(Debug, Clone, PartialEq)]
pub struct DiversitySeries {
    pub diversity: Vec<f64>,
    pub d_max: f64,
    pub exploration_pct: Vec<f64>,
    pub exploitation_pct: Vec<f64>,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Mean absolute deviation from the per-dimension median, averaged over
/// dimensions. Zero iff every agent sits at the same point.
///
/// Returns 0 for an empty population.
pub fn population_diversity<P: AsRef<[f64]>>(positions: &[P]) -> f64 {
    let n = positions.len();
    let Some(first) = positions.first() else { return 0.0 };
    let d = first.as_ref().len();
    if d == 0 {
        return 0.0;
    }
    let mut column = vec![0.0; n];
    let mut total = 0.0;
    for q in 0..d {
        for (c, p) in column.iter_mut().zip(positions) {
            *c = p.as_ref()[q];
        }
        let med = median(&mut column);
        total += column.iter().map(|x| (med - x).abs()).sum::<f64>() / n as f64;
    }
    total / d as f64
}

/// Normalise a diversity series by its run-wide maximum.
///
/// An all-zero series is reported as 0 % exploration / 100 % exploitation.
pub fn exploration_exploitation(series: &[f64]) -> DiversitySeries {
    let d_max = series.iter().copied().fold(0.0, f64::max);
    let (exploration_pct, exploitation_pct) = if d_max > 0.0 {
        series
            .iter()
            .map(|&d| (100.0 * (d / d_max), 100.0 * ((d - d_max).abs() / d_max)))
            .unzip()
    } else {
        (vec![0.0; series.len()], vec![100.0; series.len()])
    };
    DiversitySeries { diversity: series.to_vec(), d_max, exploration_pct, exploitation_pct }
}
