//! End-to-end tests of the `ballot` binary: output encodings, exit
//! codes, the budget override, and cross-subcommand agreement.

use std::process::{Command, Output};

use ballot_core::Ratio;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ballot"));
    cmd.args(args).env_remove("BALLOT_ENUM_BUDGET");
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(output.status.success(), "stderr: {}", text(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn as_ratio(value: &Value) -> Ratio {
    let num = value["num"].as_str().expect("num field");
    let den = value["den"].as_str().expect("den field");
    format!("{num}/{den}").parse().expect("rational fields re-parse")
}

#[test]
fn exact_json_reports_reduced_rationals() {
    let out = stdout_json(&run(&["exact", "--a", "5", "--b", "2", "--mu", "3/2", "--json"]));
    assert_eq!(out["total"], 21);
    assert_eq!(out["desirable"], 7);
    assert_eq!(out["cute"], 9);
    assert_eq!(as_ratio(&out["p"]), "1/3".parse::<Ratio>().unwrap());
    assert_eq!(as_ratio(&out["p_star"]), "3/7".parse::<Ratio>().unwrap());
    assert_eq!(as_ratio(&out["mu"]), "3/2".parse::<Ratio>().unwrap());
}

#[test]
fn exact_and_series_agree_end_to_end() {
    for (a, b, mu) in [("5", "2", "3/2"), ("7", "3", "2"), ("9", "2", "7/3")] {
        let exact = stdout_json(&run(&["exact", "--a", a, "--b", b, "--mu", mu, "--json"]));
        let series = stdout_json(&run(&["takacs", "--a", a, "--b", b, "--mu", mu, "--json"]));
        assert_eq!(exact["p"], series["p"], "({a}, {b}, {mu})");
    }
}

#[test]
fn decimal_ratio_input_is_exact() {
    let decimal = stdout_json(&run(&["exact", "--a", "5", "--b", "2", "--mu", "1.5", "--json"]));
    let fraction = stdout_json(&run(&["exact", "--a", "5", "--b", "2", "--mu", "3/2", "--json"]));
    assert_eq!(decimal, fraction);
}

#[test]
fn degenerate_series_sets_exit_code() {
    let out = run(&["takacs", "--a", "5", "--b", "2", "--mu", "1/2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(text(&out.stderr).contains("DegenerateRecurrence"));
}

#[test]
fn bounds_text_shows_both_theorems() {
    let out = run(&["bounds", "--a", "5", "--b", "2", "--mu", "3/2"]);
    assert!(out.status.success());
    let stdout = text(&out.stdout);
    assert!(stdout.contains("[2/7, 3/7]"), "{stdout}");
    assert!(stdout.contains("[3/7, 1/2]"), "{stdout}");
}

#[test]
fn bounds_with_partial_domain_still_succeed() {
    let out = run(&["bounds", "--a", "2", "--b", "2", "--mu", "1"]);
    assert!(out.status.success());
    let stdout = text(&out.stdout);
    assert!(stdout.contains("not applicable"), "{stdout}");
    assert!(stdout.contains("[1/4, 1/3]"), "{stdout}");

    let json = stdout_json(&run(&["bounds", "--a", "2", "--b", "2", "--mu", "1", "--json"]));
    assert!(json["theorem1"].is_null());
    assert_eq!(as_ratio(&json["theorem2"]["lower"]), "1/4".parse::<Ratio>().unwrap());
}

#[test]
fn bounds_outside_both_domains_fail() {
    let out = run(&["bounds", "--a", "1", "--b", "2", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(text(&out.stderr).contains("DomainViolation"));
}

#[test]
fn budget_override_is_honored() {
    let out = run_with_env(
        &["exact", "--a", "5", "--b", "2", "--mu", "1"],
        &[("BALLOT_ENUM_BUDGET", "5")],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(text(&out.stderr).contains("BudgetExceeded"));

    let out = run_with_env(
        &["exact", "--a", "5", "--b", "2", "--mu", "1"],
        &[("BALLOT_ENUM_BUDGET", "not-a-number")],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("ParseError"));
}

#[test]
fn cycle_reports_rotation_structure() {
    let out = stdout_json(&run(&["cycle", "--sequence", "BAABA", "--mu", "1", "--json"]));
    assert_eq!(out["pivot_index"], 1);
    assert_eq!(out["base_sequence"], "AABAB");
    assert_eq!(out["cute_rotation_offsets"], serde_json::json!([1, 3, 5]));
    assert_eq!(out["rotation_counts"]["passed"], true);
}

#[test]
fn unrotatable_sequence_sets_exit_code() {
    let out = run(&["cycle", "--sequence", "ABB", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(6));
    assert!(text(&out.stderr).contains("NotRotatableToCute"));
}

#[test]
fn weighted_json_includes_bounds() {
    let out = stdout_json(&run(&["weighted", "--a", "3", "--weights", "2", "--mu", "1", "--json"]));
    assert_eq!(out["total"], 4);
    assert_eq!(as_ratio(&out["p"]), "1/4".parse::<Ratio>().unwrap());
    assert_eq!(as_ratio(&out["p_star"]), "1/2".parse::<Ratio>().unwrap());
    assert_eq!(as_ratio(&out["bounds"]["integer_upper"]), "1/4".parse::<Ratio>().unwrap());

    let out = stdout_json(&run(&[
        "weighted", "--a", "3", "--weights", "3/2,1/2", "--mu", "1", "--json",
    ]));
    assert_eq!(as_ratio(&out["b"]), "2".parse::<Ratio>().unwrap());
    assert_eq!(out["b_prime"], 2);
    assert!(out["bounds"]["integer_upper"].is_null());
}

#[test]
fn sampling_runs_reproduce_exactly() {
    let args = ["sample", "--a", "5", "--b", "2", "--mu", "3/2", "--n", "2000", "--seed", "9", "--json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let out = run(&["sample", "--a", "5", "--b", "2", "--mu", "3/2", "--n", "0", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(7));
    assert!(text(&out.stderr).contains("PreconditionViolation"));
}

#[test]
fn scan_streams_one_json_object_per_instance() {
    let out = run(&["scan", "--a-max", "2", "--b-max", "1", "--mu-list", "1,3/2"]);
    assert!(out.status.success());
    let lines: Vec<Value> = text(&out.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("NDJSON line"))
        .collect();
    // (a, b) grid minus the empty corner, times two ratios.
    assert_eq!(lines.len(), 10);
    for line in &lines {
        assert_eq!(line["status"], "ok");
        assert!(line["p"].is_object());
    }
}

#[test]
fn scan_marks_over_budget_instances_skipped() {
    let out = run_with_env(
        &["scan", "--a-max", "2", "--b-max", "1", "--mu-list", "1"],
        &[("BALLOT_ENUM_BUDGET", "1")],
    );
    assert!(out.status.success());
    let stdout = text(&out.stdout);
    let skipped = stdout
        .lines()
        .map(|line| serde_json::from_str::<Value>(line).unwrap())
        .filter(|line| line["status"] == "skipped")
        .count();
    assert!(skipped > 0, "{stdout}");
}

#[test]
fn malformed_flags_exit_with_usage_code() {
    let out = run(&["exact", "--a", "5", "--b", "2", "--mu", "abc"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["exact", "--a", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
