//! End-to-end runs of the installed binary: output shapes, exit codes,
//! file loading, and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_radocount");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Wall-clock fields differ between runs; blank them before comparing.
fn scrub_wall(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            if let Some(v) = map.get_mut("wall_seconds") {
                *v = serde_json::Value::Null;
            }
            for v in map.values_mut() {
                scrub_wall(v);
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                scrub_wall(v);
            }
        }
        _ => {}
    }
}

#[test]
fn count_reports_classes_as_json() {
    let out = run(&[
        "count", "--eq", "schur", "--n", "11", "--coloring", "R4 B6 R1", "--classes", "--format",
        "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["manifest"]["command"][1], "count");
    assert_eq!(v["records"][0]["classes"]["mono"], 5);
    assert_eq!(v["records"][0]["classes"]["nonmono"], 25);
    assert_eq!(v["records"][0]["classes"]["rainbow"], 0);
    assert_eq!(v["records"][0]["classes"]["total"], 30);
    assert!(v["records"][0]["stats"].is_null());
}

#[test]
fn count_csv_rows_on_stdout_manifest_on_stderr() {
    let out = run(&[
        "count", "--eq", "schur", "--n", "11", "--coloring", "R4 B6 R1", "--classes", "--stats",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    let body = String::from_utf8(out.stdout).unwrap();
    let mut lines = body.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("coloring,n,r,mono,nonmono,rainbow,total"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("R4 B6 R1,11,2,5,25,0,30"));
    let manifest: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(manifest["command"][1], "count");
    assert!(manifest["tolerances"]["recipe_gap_per_n"].is_number());
}

#[test]
fn count_loads_one_coloring_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("colorings.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "R4 B6 R1").unwrap();
    writeln!(f).unwrap();
    writeln!(f, "B4 R6 B1").unwrap();
    drop(f);

    let spec = format!("@{}", path.display());
    let out = run(&[
        "count", "--eq", "schur", "--n", "11", "--coloring", &spec, "--classes", "--format",
        "json",
    ]);
    let v = stdout_json(&out);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["coloring"], "R4 B6 R1");
    assert_eq!(records[1]["coloring"], "B4 R6 B1");
}

#[test]
fn count_rejects_wrong_length() {
    let out = run(&["count", "--eq", "schur", "--n", "10", "--coloring", "R4 B6 R1", "--classes"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("11 cells"), "stderr: {err}");
}

#[test]
fn search_exhaustive_finds_frozen_minimum() {
    let out = run(&[
        "search", "--eq", "schur", "--n", "12", "--objective", "min-mono", "--mode", "exhaustive",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["report"]["best_value"], 6);
    assert_eq!(v["report"]["explored"], 4096);
    assert_eq!(v["report"]["evaluated"], 2048);
    assert_eq!(v["report"]["witnesses"][0]["runs"], "R5 B6 R1");
    assert_eq!(v["manifest"]["objective"], "min-mono");
}

#[test]
fn search_refuses_overlarge_budget_up_front() {
    let out = run(&[
        "search", "--eq", "schur", "--n", "40", "--objective", "min-mono", "--mode", "exhaustive",
        "--budget", "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn search_output_is_deterministic() {
    let args = [
        "search", "--eq", "schur", "--n", "30", "--objective", "min-mono", "--mode", "local",
        "--restarts", "4", "--seed", "7",
    ];
    let mut first = stdout_json(&run(&args));
    let mut second = stdout_json(&run(&args));
    scrub_wall(&mut first);
    scrub_wall(&mut second);
    assert_eq!(first, second);
}

#[test]
fn rainbow_objective_needs_three_colors() {
    let out = run(&[
        "search", "--eq", "schur", "--n", "12", "--objective", "max-rainbow", "--mode",
        "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "search", "--eq", "schur", "--n", "10", "--r", "3", "--objective", "max-rainbow",
        "--mode", "exhaustive",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["report"]["best_value"], 11);
}

#[test]
fn verify_identities_suite_writes_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("results");
    let out = run(&[
        "verify", "--suite", "identities", "--n-list", "12,14",
        "--out", out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let csv = std::fs::read_to_string(out_dir.join("identities.csv")).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("equation,n,sample,nu_residual,d2_residual"));
    assert!(lines.count() >= 200, "one row per sampled coloring per family");

    let manifest: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out_dir.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"][1], "verify");
    assert_eq!(manifest["n_list"], serde_json::json!([12, 14]));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--eq", "bogus", "--n", "5", "--coloring", "R5"]).status.code(),
        Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["search", "--help"]).status.code(), Some(0));
}
