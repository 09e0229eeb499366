use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn chromroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromroot")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chromroot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn quartic_report() {
    let out = chromroot(&["verify-quartic", "--p-max", "3", "--q-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["experiment"], "verify_quartic");
    assert_eq!(v["summary"]["all_passed"], true);
    assert_eq!(v["summary"]["extrema"]["value_2_6"], "200");
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn minq_finds_a_counterexample() {
    let v = json(&chromroot(&["minq", "--p", "2", "--q-max", "10"]));
    let q = v["summary"]["extrema"]["q_star"].as_u64().unwrap();
    assert!((2..=6).contains(&q));
    assert_eq!(v["summary"]["extrema"]["certificate"]["verdict"], "not-quasi-stable");
}

#[test]
fn reports_are_reproducible() {
    let args = ["kn-minus-2k2", "--from", "4", "--to", "6", "--threads", "2"];
    let a = chromroot(&args);
    let b = chromroot(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rootcloud_csv() {
    let out = chromroot(&["rootcloud", "--order", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph6,re,im,radius"));
    assert_eq!(lines.count(), 36);
}

#[test]
fn rootcloud_from_file_flags_mixed_orders() {
    let input = scratch("mixed.g6");
    std::fs::write(&input, "Cl\nBw\nCl\n").unwrap();
    let report = scratch("mixed.json");
    let out = chromroot(&["rootcloud", "--file", input.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["summary"]["extrema"]["mixed_orders"], true);
    assert_eq!(v["summary"]["counts"]["polynomials"], 2);
}

#[test]
fn unreadable_file_is_an_error() {
    let out = chromroot(&["rootcloud", "--file", "/nonexistent/graphs.g6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(chromroot(&["minq", "--p", "9"]).status.code(), Some(2));
    assert_eq!(chromroot(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(chromroot(&["verify-n3", "--n", "8"]).status.code(), Some(2));
}

#[test]
fn violations_exit_1() {
    // an empty corpus validates nothing, so no candidate survives
    let out = chromroot(&["identify-h", "--corpus-size", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["summary"]["all_passed"], false);
}

#[test]
fn coefficients_with_explicit_h() {
    let out = chromroot(&["verify-coeffs", "--n", "4", "--h", "D^o", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stderr).unwrap().contains("all checks passed"));
}

#[test]
fn identify_h_pins_one_graph() {
    let v = json(&chromroot(&["identify-h", "--corpus-size", "80"]));
    assert_eq!(v["summary"]["extrema"]["survivors"], serde_json::json!(["D^o"]));
}

#[test]
fn n3_and_timing() {
    let v = json(&chromroot(&["verify-n3", "--n", "5", "--timing"]));
    assert_eq!(v["summary"]["all_passed"], true);
    assert!(v["timing_ms"].is_u64());
}
