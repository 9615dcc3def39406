use std::process::{Command, Output};

use serde_json::Value;

fn conicfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conicfree")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = conicfree(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    conicfree(args).status.code().unwrap()
}

#[test]
fn nodal_catalog_text() {
    let out = conicfree(&["catalog", "nodal"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("nodal cubic: x^3 - x*y*z + y^3\n"));
    assert!(text.contains("Q1  s1 = (1 : 1 : 2)\n    21*x^2 - 22*x*y - 6*x*z + 21*y^2 - 6*y*z + z^2\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with('Q')).count(), 3);
}

#[test]
fn fermat_catalog_json_matches_the_fixture() {
    let mut v = json(&["catalog", "fermat", "--json"]);
    assert_eq!(v["command"], "catalog fermat");
    v.as_object_mut().unwrap().remove("command");
    let fixture: Value = serde_json::from_str(include_str!("../../core/tests/fixtures/fermat_catalog.json")).unwrap();
    assert_eq!(v, fixture);
    assert_eq!(v["sets"].as_array().unwrap().len(), 9);
}

#[test]
fn fermat_pair_orbits() {
    let v = json(&["catalog", "fermat", "--pairs", "--json"]);
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 13);
    assert!(orbits.iter().all(|o| o["size"] == 27));
    assert_eq!(orbits[0]["representative"], serde_json::json!(["P1:0", "P1:1"]));
    assert_eq!(code(&["catalog", "nodal", "--pairs"]), 2);
}

fn certificate(args: &[&str]) -> Value {
    let mut full = vec!["certify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--json", "--no-timing"]);
    let v = json(&full);
    assert!(v.get("seconds").is_none());
    v
}

#[test]
fn certify_nodal_pair() {
    let v = certificate(&["nodal", "1", "2"]);
    assert_eq!(v["certificate"]["verdict"], "Free");
    assert_eq!(v["certificate"]["exponents"], serde_json::json!([3, 3]));
    assert_eq!(v["certificate"]["tjurina"], 27);
}

#[test]
fn certify_fermat_arrangements() {
    let v = certificate(&["fermat", "P1:0", "P2:0"]);
    assert_eq!(v["certificate"]["verdict"], "NearlyFree");
    assert_eq!(v["certificate"]["exponents"], serde_json::json!([3, 4]));
    assert_eq!(v["certificate"]["tjurina"], 26);
    let v = certificate(&["fermat", "P1:0", "P1:1", "P1:2"]);
    assert_eq!(v["certificate"]["verdict"], "Free");
    assert_eq!(v["certificate"]["exponents"], serde_json::json!([3, 5]));
    assert_eq!(v["certificate"]["tjurina"], 49);
    assert_eq!(v["census_summary"], "J_2_0 + 3xA_11 + 6xA_1");
}

#[test]
fn invalid_selections_are_usage_errors() {
    assert_eq!(code(&["certify", "fermat", "P1:0", "P1:0"]), 2);
    assert_eq!(code(&["certify", "fermat", "P10:0"]), 2);
    assert_eq!(code(&["certify", "nodal", "P1:0"]), 2);
    assert_eq!(code(&["certify", "nodal", "0"]), 2);
    assert_eq!(code(&["certify", "cusp", "1"]), 2);
    assert_eq!(code(&["certify", "nodal"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn check_filter_and_determinism() {
    let a = conicfree(&["check", "--only", "coolidge", "--no-timing"]);
    let b = conicfree(&["check", "--only", "coolidge", "--no-timing"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().ends_with("1/1 passed\n"));
    assert_eq!(code(&["check", "--only", "no-such-anchor"]), 2);
}

#[test]
fn check_json_for_the_nodal_arrangements() {
    let v = json(&["check", "--only", "nodal-arrangements", "--json", "--no-timing"]);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert!(results.iter().all(|r| r["passed"] == true && r.get("seconds").is_none()));
    assert_eq!(v["passed"], 3);
}
