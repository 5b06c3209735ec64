use std::process::{Command, Output};

use orbicover_core::report::Report;
use serde_json::Value;

fn orbicover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbicover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, String, Vec<Value>) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = orbicover(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: Vec<Value> = serde_json::from_str(&text).unwrap();
    (out.status.code().unwrap(), text, parsed)
}

fn statuses(reports: &[Value]) -> Vec<&str> {
    reports.iter().map(|r| r["status"].as_str().unwrap()).collect()
}

#[test]
fn euler_two_three() {
    let (code, _, reports) = json(&["euler", "--n", "2", "--b", "3"]);
    assert_eq!(code, 0);
    assert!(statuses(&reports).iter().all(|s| *s == "MATCH"));
    let euler = reports.iter().find(|r| r["claim"] == "euler number n=2 b=3").unwrap();
    assert_eq!(euler["computed"], "0");
    assert_eq!(euler["details"]["degree"], "18");
    assert_eq!(euler["details"]["cover"], "C^2");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let (_, text, reports) = json(&["curve", "--r", "2", "--s", "3"]);
    let typed: Vec<Report> = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&typed).unwrap();
    assert_eq!(text.trim_end(), again);
    for r in &reports {
        for key in ["claim", "anchor", "computed", "expected", "provenance", "status", "millis", "seed"] {
            assert!(r.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn curve_census() {
    let (code, _, reports) = json(&["curve", "--r", "2", "--s", "3"]);
    assert_eq!(code, 0);
    let census = reports.iter().find(|r| r["claim"] == "L^(r/s) census r=2 s=3").unwrap();
    assert_eq!(census["computed"], "degree 6, genus 0, cusps 6, nodes 4");
    let nodes = reports.iter().find(|r| r["claim"] == "L^(r/s) nodes r=2 s=3").unwrap();
    assert_eq!(nodes["details"]["genus"], "0");
}

#[test]
fn curve_accepts_coefficients() {
    let (code, _, reports) = json(&["curve", "--r", "1", "--s", "5", "--coeffs", "1,3,7"]);
    assert_eq!(code, 0);
    let cert = reports.iter().find(|r| r["claim"] == "L^(1/s) nodality s=5").unwrap();
    assert_eq!(cert["computed"], "NODAL(6)");
    assert_eq!(cert["details"]["coefficients"], "1,3,7");
}

#[test]
fn discriminant_degree_and_incidence() {
    let (code, _, reports) = json(&["discriminant", "--n", "3", "--b", "1", "--seed", "11"]);
    assert_eq!(code, 0);
    assert!(statuses(&reports).iter().all(|s| *s == "MATCH"));
    assert!(reports.iter().all(|r| r["seed"] == 11));
    let degree = reports.iter().find(|r| r["claim"] == "D_n^(b) degree n=3 b=1").unwrap();
    assert_eq!(degree["computed"], "4");
}

#[test]
fn discriminant_rejects_common_factor() {
    let out = orbicover(&["discriminant", "--n", "2", "--b", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
}

#[test]
fn discriminant_with_marked_points() {
    let (code, _, _) = json(&["discriminant", "--n", "2", "--b", "3", "--qs", "0:1,1:0,1:1"]);
    assert_eq!(code, 0);
}

#[test]
fn icosahedral_order() {
    let (code, _, reports) = json(&["order", "T(2,3,5)"]);
    assert_eq!(code, 0);
    assert_eq!(reports[0]["computed"], "60");
    assert_eq!(reports[0]["status"], "MATCH");
}

#[test]
fn mismatch_sets_exit_code() {
    let (code, _, reports) = json(&["order", "B2(3,2,2)"]);
    assert_eq!(reports[0]["status"], "MISMATCH");
    assert_eq!(code, 1);
}

#[test]
fn both_conventions_for_mixed_relations() {
    let (_, _, reports) = json(&["--mixed-tau0", "both", "order", "B(n=3; a=3; b=[inf])"]);
    assert_eq!(reports.len(), 2);
    let conventions: Vec<&str> = reports
        .iter()
        .map(|r| r["details"]["mixed relations"].as_str().unwrap())
        .collect();
    assert!(conventions.contains(&"mixed i>=0") && conventions.contains(&"mixed i>=1"));
}

#[test]
fn classify_bad_pair() {
    let (code, _, reports) = json(&["classify", "2,3"]);
    assert_eq!(code, 0);
    assert_eq!(reports[0]["computed"], "BAD");
}

#[test]
fn conjecture_finite_case() {
    let (code, _, reports) = json(&["conjecture", "--n", "2", "--a", "2", "--bs", "3,3"]);
    assert_eq!(code, 0);
    assert_eq!(reports[0]["computed"], "finite");
}

#[test]
fn text_output_has_one_line_per_report() {
    let out = orbicover(&["euler", "--n", "3", "--b", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let headlines = text.lines().filter(|l| !l.starts_with(' ')).count();
    assert_eq!(headlines, 3);
    assert!(text.lines().all(|l| !l.starts_with("MISMATCH")));
}

#[test]
fn bad_arguments_are_rejected() {
    assert_eq!(orbicover(&["classify", "2,x"]).status.code(), Some(2));
    assert_eq!(orbicover(&["curve", "--r", "1", "--s", "4", "--coeffs", "1,2"]).status.code(), Some(2));
}
