//! The installed binary: exit codes, streams and golden output.

use std::process::{Command, Output};

fn pathsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathsum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn success_is_zero() {
    let o = pathsum(&["count", "--kind", "P", "--steps", "8", "--end", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "56\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn refutation_is_one() {
    let o = pathsum(&["prove", "--identity", "I3", "--n", "2", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("refuted at m="));
}

#[test]
fn unequal_sweep_is_one() {
    let o = pathsum(&["verify", "--identity", "I5", "--n-max", "1", "--m", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().last(), Some("I5,1,-1,,3,1,unequal"));
}

#[test]
fn usage_and_domain_errors_are_two() {
    for args in [
        &["verify"][..],
        &["count", "--kind", "Q", "--steps", "2", "--end", "0"],
        &["count", "--kind", "T", "--steps", "2", "--end", "0", "--barrier", "0"],
        &["count", "--kind", "S", "--steps", "2", "--end", "-2", "--barrier", "-1"],
        &["prove", "--identity", "I9", "--n", "3"],
        &["induct", "--identity", "I1", "--n-max", "3"],
        &["simulate", "--steps", "4", "--samples", "0"],
    ] {
        let o = pathsum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn jsonl_rows_parse() {
    let o = pathsum(&["verify", "--identity", "I2", "--n-max", "2", "--m", "1/2,-3/2", "--r", "9/7", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[1]["m"], "-3/2");
    assert!(rows.iter().all(|r| r["status"] == "equal" && r["lhs"] == r["rhs"]));
}

#[test]
fn simulate_is_reproducible() {
    let args = ["simulate", "--steps", "8", "--samples", "5000", "--seed", "42"];
    let a = pathsum(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, pathsum(&args).stdout);
    assert_ne!(a.stdout, pathsum(&["simulate", "--steps", "8", "--samples", "5000", "--seed", "43"]).stdout);
}

#[test]
fn figures_match_golden_files() {
    let o = pathsum(&["render", "--figure", "1"]);
    assert_eq!(stdout(&o), include_str!("golden/fig1.txt"));
    let o = pathsum(&["render", "--figure", "2"]);
    assert_eq!(stdout(&o), include_str!("golden/fig2.txt"));
    // the explicit form draws the same walk on a fitted range
    let o = pathsum(&["render", "--steps", "8", "--path", "LRRLLLRL"]);
    for row in stdout(&o).lines().filter(|l| l.contains('/')) {
        assert!(include_str!("golden/fig1.txt").lines().any(|g| g == row), "{row}");
    }
}
