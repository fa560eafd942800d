//! CLI contract tests: exit codes, output formats, the seed environment
//! variable, and failure reporting.

use std::path::PathBuf;
use std::process::{Command, Output};

fn harmonid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonid"))
        .args(args)
        .env_remove("HARMONID_SEED")
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(name)
}

#[test]
fn list_enumerates_exactly_the_catalog() {
    let out = harmonid(&["list", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 33);
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"prop_a"));
    assert!(ids.contains(&"dougall_5f4"));
    assert!(ids.contains(&"bisect_relation"));
    for row in rows {
        assert!(row["mode"] == "exact" || row["mode"] == "float");
        assert!(row["anchor"].as_str().is_some_and(|a| !a.is_empty()));
        assert!(row["params"].as_array().is_some_and(|p| !p.is_empty()));
    }
}

#[test]
fn verify_single_identity_succeeds() {
    let out = harmonid(&["verify", "--id", "prop_a", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("prop_a"));
    assert!(text.contains("5")); // five grid points
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_unknown_id_is_a_usage_error() {
    let out = harmonid(&["verify", "--id", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown identity id"));
}

#[test]
fn verify_without_selection_is_a_usage_error() {
    let out = harmonid(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_rejected_before_any_computation() {
    let out = harmonid(&["verify", "--all", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_verification_exits_one_but_still_writes_the_report() {
    // an absurdly tight float tolerance forces disagreements
    let path = tmp("harmonid_cli_fail.json");
    let out = harmonid(&[
        "verify",
        "--id",
        "whipple",
        "--tol",
        "1e-30",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let body = std::fs::read_to_string(&path).expect("report written");
    let _ = std::fs::remove_file(&path);
    let json: serde_json::Value = serde_json::from_str(&body).unwrap();
    let report = &json.as_array().unwrap()[0];
    assert_eq!(report["identity_id"], "whipple");
    assert!(report["failed"].as_u64().unwrap() >= 1);
    assert!(!report["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn seed_environment_variable_is_the_default_seed() {
    let a = tmp("harmonid_cli_env_seed.json");
    let b = tmp("harmonid_cli_flag_seed.json");
    let out = Command::new(env!("CARGO_BIN_EXE_harmonid"))
        .args([
            "verify", "--id", "thm_b", "--n-max", "4", "--format", "json",
        ])
        .args(["--out", a.to_str().unwrap()])
        .env("HARMONID_SEED", "977")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let out = harmonid(&[
        "verify",
        "--id",
        "thm_b",
        "--n-max",
        "4",
        "--seed",
        "977",
        "--format",
        "json",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file_a = std::fs::read(&a).unwrap();
    let file_b = std::fs::read(&b).unwrap();
    let _ = std::fs::remove_file(&a);
    let _ = std::fs::remove_file(&b);
    assert_eq!(file_a, file_b);
}

#[test]
fn invalid_seed_environment_variable_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_harmonid"))
        .args(["verify", "--id", "prop_a", "--n-max", "2"])
        .env("HARMONID_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_format_has_the_documented_header() {
    let out = harmonid(&[
        "verify", "--id", "prop_a", "--n-max", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,total,passed,failed,skipped,wall_ms\n"));
}

#[test]
fn derivcheck_and_gammacheck_run_clean() {
    let out = harmonid(&["derivcheck", "--samples", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("deriv_binom_rule"));
    assert!(text.contains("deriv_harmonic_rule"));
    assert!(text.contains("reversal_symmetry"));

    let out = harmonid(&["gammacheck", "--samples", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dougall_5f4_reduction"));
    assert!(text.contains("kummer_reduction"));
    assert!(text.contains("whipple_like"));
}

#[test]
fn bench_reports_equal_evaluation_orders() {
    let out = harmonid(&["bench", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,equal,naive_ms,incremental_ms,naive_mul_ops,incremental_mul_ops")
    );
    for line in lines {
        assert!(line.split(',').nth(1) == Some("true"), "row: {line}");
    }
}
