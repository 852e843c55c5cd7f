//! Text tables and JSON for the subcommands. Sets render as `{a, c}` in
//! tables and as label arrays in JSON; both list elements in universe order.

use std::fmt::Write;

use gotas_core::oracle::{CheckMode, OracleDiff, PropositionReport};
use gotas_core::{ApproxReport, Exactness, Subset};
use serde_json::{json, Value};

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut text = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{cell:<w$}");
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn labels(s: &Subset) -> Value {
    json!(s.labels())
}

pub fn opens_table(opens: &[Subset]) -> String {
    let mut out = String::new();
    for open in opens {
        let _ = writeln!(out, "{open}");
    }
    let _ = writeln!(out, "count: {}", opens.len());
    out
}

pub fn opens_json(opens: &[Subset]) -> String {
    let value = json!({
        "opens": opens.iter().map(labels).collect::<Vec<_>>(),
        "count": opens.len(),
    });
    serde_json::to_string_pretty(&value).expect("json")
}

pub fn analysis_table(a: &Subset, rows: &[ApproxReport], mixed: Option<&[Exactness]>) -> String {
    let mut headers = vec![
        "family", "dir", "lower", "upper", "boundary", "positive", "negative", "accuracy",
        "status",
    ];
    if mixed.is_some() {
        headers.push("mixed");
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut cells = vec![
                r.family.to_string(),
                r.direction.to_string(),
                r.lower.to_string(),
                r.upper.to_string(),
                r.boundary.to_string(),
                r.positive.to_string(),
                r.negative.to_string(),
                r.accuracy.to_string(),
                r.exactness.to_string(),
            ];
            if let Some(mixed) = mixed {
                cells.push(mixed[i].to_string());
            }
            cells
        })
        .collect();
    format!("A = {a}\n{}", table(&headers, &body))
}

pub fn analysis_json(a: &Subset, rows: &[ApproxReport], mixed: Option<&[Exactness]>) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = json!({
                "family": r.family,
                "direction": r.direction,
                "lower": labels(&r.lower),
                "upper": labels(&r.upper),
                "boundary": labels(&r.boundary),
                "positive": labels(&r.positive),
                "negative": labels(&r.negative),
                "accuracy": {
                    "numerator": r.accuracy.numerator,
                    "denominator": r.accuracy.denominator,
                    "value": r.accuracy.as_f64(),
                },
                "exactness": r.exactness,
            });
            if let Some(mixed) = mixed {
                row["mixed_exactness"] = json!(mixed[i]);
            }
            row
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "set": labels(a), "rows": rows })).expect("json")
}

pub fn check_table(reports: &[PropositionReport]) -> String {
    let body: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.id.clone(),
                r.instances.to_string(),
                if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                r.statement.clone(),
            ]
        })
        .collect();
    let mut out = table(&["id", "instances", "result", "statement"], &body);
    for r in reports.iter().filter(|r| !r.passed()) {
        let v = &r.violations[0];
        let pair = match &v.b {
            Some(b) => format!("A = {}, B = {}", v.a, b),
            None => format!("A = {}", v.a),
        };
        let _ = writeln!(
            out,
            "{}: {} violation(s); first at {} ({}): {}",
            r.id,
            r.violations.len(),
            pair,
            v.direction,
            v.detail
        );
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(
        out,
        "{} propositions: {} PASS, {} FAIL",
        reports.len(),
        reports.len() - failed,
        failed
    );
    out
}

pub fn check_json(mode: CheckMode, reports: &[PropositionReport]) -> String {
    let mode = match mode {
        CheckMode::Exhaustive => json!({ "exhaustive": true }),
        CheckMode::Sampled { samples, seed } => json!({ "samples": samples, "seed": seed }),
    };
    let value = json!({
        "mode": mode,
        "passed": reports.iter().all(|r| r.passed()),
        "reports": reports,
    });
    serde_json::to_string_pretty(&value).expect("json")
}

pub fn diff_table(diff: &OracleDiff) -> String {
    let mut out = String::new();
    for m in &diff.mismatches {
        let expected = match &m.expected {
            Ok(s) => s.to_string(),
            Err(e) => e.to_string(),
        };
        let _ = writeln!(
            out,
            "{} {} A = {}: oracle {}, implementation {}",
            m.operator, m.direction, m.subset, expected, m.actual
        );
    }
    let _ = writeln!(
        out,
        "{} mismatches / {} comparisons",
        diff.mismatches.len(),
        diff.comparisons
    );
    out
}

pub fn diff_json(diff: &OracleDiff) -> String {
    let mismatches: Vec<Value> = diff
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "operator": m.operator.to_string(),
                "direction": m.direction,
                "subset": labels(&m.subset),
                "expected": match &m.expected {
                    Ok(s) => labels(s),
                    Err(e) => json!({ "error": e.to_string() }),
                },
                "actual": labels(&m.actual),
            })
        })
        .collect();
    let value = json!({
        "comparisons": diff.comparisons,
        "mismatches": mismatches,
    });
    serde_json::to_string_pretty(&value).expect("json")
}
