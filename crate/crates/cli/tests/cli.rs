use std::process::{Command, Output};

use serde_json::Value;

fn wisopt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wisopt")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wisopt(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&args)).unwrap()
}

fn error_line(args: &[&str]) -> String {
    let out = wisopt(args);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    err.trim_end().to_string()
}

#[test]
fn frobenius_of_three_five() {
    let text = stdout(&["frobenius", "3", "5"]);
    assert!(text.contains("F: 7\n"));
    assert!(text.contains("G: {1,2,4,7}\n"));
    let v = json(&["frobenius", "3", "5"]);
    assert_eq!(v["frobenius"], 7);
    assert_eq!(v["gap_count"], 4);
}

#[test]
fn gapset_with_lambda_reports_saturation() {
    let v = json(&["gapset", "3", "5", "--lambda", "5,5"]);
    assert_eq!(v["saturated"], true);
    let v = json(&["gapset", "3", "5", "--lambda", "1,1"]);
    assert_eq!(v["values"], serde_json::json!([0, 3, 5, 8]));
}

#[test]
fn main_beats_naive_on_example() {
    let main = json(&["solve", "--family", "example_3_1", "--m", "2", "--verify"]);
    let naive = json(&["solve", "--family", "example_3_1", "--m", "2", "--solver", "naive", "--verify"]);
    assert_eq!(main["certificate"]["rank"], 0);
    assert_eq!(naive["certificate"]["rank"], 2);
}

#[test]
fn gen_then_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    let text = stdout(&["gen", "--n", "8", "--tuple", "2,3", "--seed", "7"]);
    std::fs::write(&path, text).unwrap();
    let path = path.to_str().unwrap();
    let v = json(&["verify", "--instance", path]);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 3);
    for c in certs {
        assert_eq!(c["certificate"]["feasible"], true);
    }
    assert_eq!(certs[0]["certificate"]["within_guarantee"], true);
}

#[test]
fn adversary_fools_the_zero_query_algorithm() {
    let v = json(&["adversary", "--family", "lower_bound", "--m", "2", "--solver", "none"]);
    assert_eq!(v["query_count"], 0);
    assert_eq!(v["transcript"]["fooled"], true);
    let v = json(&["adversary", "--family", "membership", "--m", "2", "--solver", "exhaustive"]);
    assert_eq!(v["transcript"]["fooled"], false);
}

#[test]
fn errors_are_single_categorized_lines() {
    assert!(error_line(&["adversary", "--family", "lower_bound", "--m", "9"]).starts_with("error: limit: "));
    assert!(error_line(&["solve", "--family", "example_3_1"]).starts_with("error: usage: "));
    assert!(error_line(&["solve", "--instance", "/no/such/file"]).starts_with("error: io: "));
    assert!(error_line(&["frobenius", "2", "4"]).starts_with("error: "));
    let line = error_line(&["solve", "--family", "example_3_1", "--m", "2", "--tuple", "3,5"]);
    assert!(line.starts_with("error: weights: "), "{line}");
}
