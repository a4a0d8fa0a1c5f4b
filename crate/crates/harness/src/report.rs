use crate::experiment::SummaryRow;

/// Rows of one scenario ordered best first: median cost, then mean cost,
/// then algorithm name.
pub fn rank<'a>(rows: &'a [SummaryRow], scenario: &str) -> Vec<&'a SummaryRow> {
    let mut group: Vec<&SummaryRow> = rows.iter().filter(|r| r.scenario == scenario).collect();
    group.sort_by(|a, b| {
        a.median_cost
            .total_cmp(&b.median_cost)
            .then(a.mean_cost.total_cmp(&b.mean_cost))
            .then_with(|| a.algorithm.cmp(&b.algorithm))
    });
    group
}

fn scenarios_in_order(rows: &[SummaryRow]) -> Vec<&str> {
    let mut names: Vec<&str> = Vec::new();
    for r in rows {
        if !names.contains(&r.scenario.as_str()) {
            names.push(&r.scenario);
        }
    }
    names
}

/// Plain-text table grouped by scenario, ranked within each group. The
/// winner of each scenario is marked with `*`.
pub fn report_table(rows: &[SummaryRow]) -> String {
    let mut out = format!(
        "{:<16} {:>4}  {:<10} {:>12} {:>12} {:>12} {:>5}  \n",
        "scenario", "rank", "algorithm", "median", "mean", "std", "runs"
    );
    for scenario in scenarios_in_order(rows) {
        for (i, r) in rank(rows, scenario).into_iter().enumerate() {
            let flag = if i == 0 { "*" } else { "" };
            out += &format!(
                "{:<16} {:>4}  {:<10} {:>12.4} {:>12.4} {:>12.4} {:>5}  {}\n",
                r.scenario, i + 1, r.algorithm, r.median_cost, r.mean_cost, r.std_cost, r.runs, flag
            );
        }
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}
