//! End-to-end checks of the command-line surface: exit codes, JSON output,
//! and output determinism.

use std::process::{Command, Output};

fn voaplus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voaplus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_vacuum_mode() {
    // 1_{-1} J = J
    let out = voaplus(&["eval", "--k", "3", "--expr", "[1]_-1 J"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    // canonical order puts the longest-part monomial first
    assert_eq!(arr[0]["parts"], serde_json::json!([3, 1]));
    assert_eq!(arr[0]["coeff"], "-1/3");
    assert_eq!(arr[2]["parts"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(arr[2]["coeff"], "1/36");
    // [J]_0 1 = 0
    let out = voaplus(&["eval", "--k", "3", "--expr", "[J]_0 1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[]");
}

#[test]
fn eval_symbolic() {
    let out = voaplus(&["eval", "--k", "sym", "--expr", "L(-2) 1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["coeff"], "(1)/(4*k)");
    // symbolic charge pairing is refused with a diagnostic
    let out = voaplus(&["eval", "--k", "sym", "--expr", "[E]_-7 E"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("error"));
}

#[test]
fn eval_parse_error_diagnostics() {
    let out = voaplus(&["eval", "--k", "3", "--expr", "L(-2) Q"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let msg = v["error"].as_str().unwrap();
    assert!(msg.contains("byte 6"), "{}", msg);
}

#[test]
fn congruent_exit_codes() {
    let out = voaplus(&["congruent", "--k", "3", "--lhs", "a(-1) F", "--rhs", "a(-1) F"]);
    assert!(out.status.success());
    // J and L(-2)^2 1 are independent in the weight-4 quotient
    let out = voaplus(&["congruent", "--k", "3", "--lhs", "J", "--rhs", "L(-2) L(-2) 1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verified"], false);
    assert!(v["residual"].is_array());
}

#[test]
fn c2dim_small_weights() {
    let out = voaplus(&["c2dim", "--k", "3", "--max-weight", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("weight,ambient_dim,c2_rank,quotient_dim"));
    assert_eq!(lines.next(), Some("0,1,0,1"));
    assert_eq!(lines.next(), Some("1,0,0,0"));
}

#[test]
fn usage_errors_exit_2() {
    let out = voaplus(&["c2dim", "--k", "3", "--max-weight", "1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = voaplus(&["tables", "--id", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = voaplus(&["--help"]);
    assert!(out.status.success());
}

#[test]
fn tables_exit_on_computed_checks() {
    let out = voaplus(&["tables", "--id", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["determinant_matches"], true);
    assert!(v.get("mismatches").is_none());
    // with --compare-paper the mismatch list appears (empty for table 1)
    let out = voaplus(&["tables", "--id", "1", "--format", "json", "--compare-paper"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    // table 2 exits 0 because the computed inverse checks pass
    let out = voaplus(&["tables", "--id", "2"]);
    assert!(out.status.success());
}

#[test]
fn deterministic_output() {
    let a = stdout(&voaplus(&["eval", "--k", "3", "--expr", "[J]_-1 E"]));
    let b = stdout(&voaplus(&["eval", "--k", "3", "--expr", "[J]_-1 E"]));
    assert_eq!(a, b);
    let a = stdout(&voaplus(&["tables", "--id", "3", "--format", "json"]));
    let b = stdout(&voaplus(&["tables", "--id", "3", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn latex_and_csv_renderings() {
    let out = voaplus(&["tables", "--id", "1", "--format", "latex"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\\begin{tabular}"));
    let out = voaplus(&["tables", "--id", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with(",a_1,a_2"));
}
