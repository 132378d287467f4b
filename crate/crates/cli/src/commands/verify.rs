use anyhow::Result;
use motspc::verify::{run_all, run_suite};
use serde_json::json;

use crate::output::{Report, Table, Verdict};

pub fn verify(suite: Option<&str>) -> Result<Report> {
    let reports = match suite {
        Some(name) => vec![run_suite(name)?],
        None => run_all(),
    };
    let mut table = Table::new(&["suite", "checks", "failures", "verdict", "description"]);
    for r in &reports {
        table.row(vec![
            r.name.clone(),
            r.checks.to_string(),
            r.failure_count.to_string(),
            if r.passed { "pass".into() } else { "FAIL".into() },
            r.description.clone(),
        ]);
    }
    let summary: Vec<_> = reports
        .iter()
        .map(|r| json!({ "name": r.name, "description": r.description, "checks": r.checks, "failure_count": r.failure_count, "passed": r.passed }))
        .collect();
    Ok(Report::new("verify", json!({ "suite": suite }), json!({ "suites": summary }), table.render())
        .truncation(json!({ "recorded_failures_per_suite": motspc::verify::MAX_RECORDED_FAILURES }))
        .verdicts(reports.iter().map(Verdict::from).collect()))
}
