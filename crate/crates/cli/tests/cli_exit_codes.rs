//! Exit-code contract: 0 on success, 1 on check failure, 2 on usage errors.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .output()
        .expect("spawn hopfcalc")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn shipped(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("presentations")
        .join(format!("{name}.hpf"))
        .display()
        .to_string()
}

#[test]
fn passing_suite_filter_exits_zero() {
    let out = run(&["suite", "negative.*", "--json"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
}

#[test]
fn corrupted_presentation_exits_one() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/corrupted.hpf")
        .display()
        .to_string();
    let out = run(&["suite", "--presentation", &path]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn shipped_presentation_verifies_cleanly() {
    let out = run(&["suite", "--presentation", &shipped("Atilde")]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn usage_errors_exit_two() {
    // clap-level: invalid field value
    let out = run(&["suite", "--field", "F5"]);
    assert_eq!(out.status.code(), Some(2));
    // application-level: unknown algebra name
    let out = run(&["reduce", "--algebra", "Nope", "a"]);
    assert_eq!(out.status.code(), Some(2));
    // no checks match the filter
    let out = run(&["suite", "does.not_exist"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed expression
    let out = run(&["reduce", "x + "]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_agrees_with_the_alias_definition() {
    let lhs = run(&[
        "reduce",
        "--algebra",
        "Atilde",
        "x*a + (r+1)*a*x + ((r+2)/3)*(a - a^2)",
    ]);
    let rhs = run(&["reduce", "--algebra", "Atilde", "F"]);
    assert!(lhs.status.success() && rhs.status.success());
    assert_eq!(stdout(&lhs), stdout(&rhs));
}

#[test]
fn verify_rejects_the_corrupted_file_and_accepts_the_catalog() {
    let out = run(&["verify", "--algebra", "A"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/corrupted.hpf")
        .display()
        .to_string();
    let out = run(&["verify", "--presentation", &path]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nichols_reports_the_rank_sequence() {
    let out = run(&["nichols", "--space", "Va", "--max-degree", "6", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["total"], 9);
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 3, 2, 1, 0, 0]));
}

#[test]
fn basis_counts_the_small_quantum_group() {
    let out = run(&["basis", "--algebra", "D", "--max-weight", "24", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 108);
    assert_eq!(v["exact"], true);
}

#[test]
fn primitives_census_via_cli() {
    let out = run(&["primitives", "--algebra", "Atilde", "--max-weight", "8", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let dims: Vec<u64> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![2, 2, 1, 0, 0, 0]);
}

#[test]
fn cleft_checks_via_cli() {
    let out = run(&["cleft", "--algebra", "A"]);
    assert!(out.status.success(), "{}", stdout(&out));
}
