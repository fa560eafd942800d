//! Report rendering: JSON, CSV, and human tables.
//!
//! JSON output is byte-deterministic for a fixed sweep configuration: it
//! carries no timing and no execution-policy fields, and rationals are
//! serialized as canonical "numerator/denominator" strings. CSV includes the
//! wall_ms column (timing is inherently non-deterministic); the table form is
//! for terminals.

use serde_json::{json, Map, Value as Json};

use crate::catalog::{self, Assignment, Value};
use crate::harness::{BenchRow, VerificationReport};

fn assignment_json(a: &Assignment) -> Json {
    let mut map = Map::new();
    for (name, value) in &a.bindings {
        let v = match value {
            Value::Natural(n) => json!(n),
            Value::Rational(r) => json!(r.to_string()),
        };
        map.insert((*name).to_string(), v);
    }
    Json::Object(map)
}

fn report_json(r: &VerificationReport) -> Json {
    json!({
        "identity_id": r.identity_id,
        "mode": r.mode,
        "total": r.total,
        "passed": r.passed,
        "failed": r.failed,
        "skipped_pole": r.skipped_pole,
        "counterexamples": r.counterexamples.iter().map(|c| json!({
            "assignment": assignment_json(&c.assignment),
            "lhs": c.lhs,
            "rhs": c.rhs,
        })).collect::<Vec<_>>(),
        "config_echo": r.config_echo,
    })
}

/// One JSON object per identity, in run order. Deterministic for a fixed
/// configuration and seed.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let body: Vec<Json> = reports.iter().map(report_json).collect();
    let mut out = serde_json::to_string_pretty(&body).expect("serializable");
    out.push('\n');
    out
}

/// CSV with the columns id,total,passed,failed,skipped,wall_ms.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("id,total,passed,failed,skipped,wall_ms\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.identity_id,
            r.total,
            r.passed,
            r.failed,
            r.skipped_pole,
            r.wall_time.as_millis()
        ));
    }
    out
}

/// Fixed-width table for terminals, one line per report plus a summary.
pub fn reports_to_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<26} {:<6} {:>7} {:>7} {:>7} {:>8} {:>9}\n",
        "identity", "mode", "total", "passed", "failed", "skipped", "wall_ms"
    ));
    for r in reports {
        out.push_str(&format!(
            "{:<26} {:<6} {:>7} {:>7} {:>7} {:>8} {:>9}\n",
            r.identity_id,
            r.mode.to_string(),
            r.total,
            r.passed,
            r.failed,
            r.skipped_pole,
            r.wall_time.as_millis()
        ));
        for c in r.counterexamples.iter().take(5) {
            out.push_str(&format!(
                "    counterexample: {} -> lhs {} vs rhs {}\n",
                c.assignment, c.lhs, c.rhs
            ));
        }
        if r.counterexamples.len() > 5 {
            out.push_str(&format!(
                "    ... {} more counterexamples\n",
                r.counterexamples.len() - 5
            ));
        }
    }
    let failed: u64 = reports.iter().map(|r| r.failed).sum();
    let total: u64 = reports.iter().map(|r| r.total).sum();
    out.push_str(&format!(
        "{} identities, {} points, {} failed\n",
        reports.len(),
        total,
        failed
    ));
    out
}

/// The catalog listing as JSON: id, parameter signature, anchor, mode.
pub fn catalog_to_json() -> String {
    let body: Vec<Json> = catalog::entries()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "params": e.params.iter().map(|p| json!({
                    "name": p.name,
                    "kind": p.kind,
                })).collect::<Vec<_>>(),
                "anchor": e.anchor,
                "mode": e.mode(),
            })
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&body).expect("serializable");
    out.push('\n');
    out
}

/// The catalog listing as CSV.
pub fn catalog_to_csv() -> String {
    let mut out = String::from("id,params,mode,anchor\n");
    for e in catalog::entries() {
        let params: Vec<String> = e
            .params
            .iter()
            .map(|p| format!("{}:{:?}", p.name, p.kind).to_lowercase())
            .collect();
        out.push_str(&format!(
            "{},{},{},\"{}\"\n",
            e.id,
            params.join(" "),
            e.mode(),
            e.anchor
        ));
    }
    out
}

/// The catalog listing as a table.
pub fn catalog_to_table() -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<16} {:<6} {:<22} {}\n",
        "id", "mode", "params", "anchor"
    ));
    for e in catalog::entries() {
        let params: Vec<String> = e
            .params
            .iter()
            .map(|p| format!("{}:{:?}", p.name, p.kind).to_lowercase())
            .collect();
        out.push_str(&format!(
            "{:<16} {:<6} {:<22} {}\n",
            e.id,
            e.mode().to_string(),
            params.join(" "),
            e.anchor
        ));
    }
    out
}

/// Benchmark rows as JSON.
pub fn bench_to_json(rows: &[BenchRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("serializable");
    out.push('\n');
    out
}

/// Benchmark rows as CSV.
pub fn bench_to_csv(rows: &[BenchRow]) -> String {
    let mut out =
        String::from("n,equal,naive_ms,incremental_ms,naive_mul_ops,incremental_mul_ops\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.3},{:.3},{},{}\n",
            r.n, r.equal, r.naive_ms, r.incremental_ms, r.naive_mul_ops, r.incremental_mul_ops
        ));
    }
    out
}

/// Benchmark rows as a table.
pub fn bench_to_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>5} {:>6} {:>12} {:>15} {:>14} {:>19}\n",
        "n", "equal", "naive_ms", "incremental_ms", "naive_mul_ops", "incremental_mul_ops"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:>5} {:>6} {:>12.3} {:>15.3} {:>14} {:>19}\n",
            r.n, r.equal, r.naive_ms, r.incremental_ms, r.naive_mul_ops, r.incremental_mul_ops
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_all, SweepConfig};

    fn small_cfg() -> SweepConfig {
        SweepConfig {
            n_max: 3,
            p_max: 2,
            q_max: 2,
            rational_samples: 2,
            jobs: 1,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn json_omits_timing_and_is_deterministic() {
        let cfg = small_cfg();
        let filter = ["prop_a".to_string(), "bisect_relation".to_string()];
        let a = reports_to_json(&run_all(&cfg, Some(&filter)).unwrap());
        let b = reports_to_json(&run_all(&cfg, Some(&filter)).unwrap());
        assert_eq!(a, b);
        assert!(!a.contains("wall"));
        assert!(!a.contains("jobs"));
        assert!(a.contains("\"identity_id\": \"prop_a\""));
    }

    #[test]
    fn csv_has_the_documented_columns() {
        let cfg = small_cfg();
        let reports = run_all(&cfg, Some(&["prop_a".to_string()])).unwrap();
        let csv = reports_to_csv(&reports);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,total,passed,failed,skipped,wall_ms"));
        let row = lines.next().unwrap();
        assert!(row.starts_with("prop_a,3,3,0,0,"));
    }

    #[test]
    fn catalog_listing_enumerates_exactly_the_catalog() {
        let json: serde_json::Value = serde_json::from_str(&catalog_to_json()).unwrap();
        let rows = json.as_array().unwrap();
        assert_eq!(rows.len(), 33);
        assert!(rows.iter().all(|r| r.get("anchor").is_some()));
        let table = catalog_to_table();
        assert_eq!(table.lines().count(), 34);
    }
}
