use std::process::{Command, Output};

use serde_json::Value;

fn spinklr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinklr")).args(args).env_remove("SPINKLR_JOBS").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/../spinklr/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn validate_reports_exit_codes() {
    let ok = spinklr(&["--builtin", "osp12", "validate"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["passed"], true);

    let bad = spinklr(&["--datum-file", &fixture("invalid/c6-violating.json"), "validate"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!json(&bad)["violations"].as_array().unwrap().is_empty());

    let unknown = spinklr(&["--builtin", "nope", "validate"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert_eq!(json(&unknown)["error"]["kind"], "input");

    let missing = spinklr(&["--datum-file", "/nonexistent.json", "validate"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn pair_agrees_with_the_form() {
    let out = spinklr(&["--builtin", "osp12", "--degree-cap", "4", "pair", "--left", "oo", "--right", "oo"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["form_agrees"], true);
    assert_eq!(v["series_text"], "(1)pi*q^-2 + (3)q^0 + (5)pi*q^2 + (7)q^4 + O(q^5)");
}

#[test]
fn serre_elements_lie_in_the_radical() {
    let out = spinklr(&["--builtin", "b01", "serre-check", "--i", "odd", "--j", "even"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["in_radical"], true);
    assert_eq!(v["pairs"][0]["bar_invariant"], true);
}

#[test]
fn output_does_not_depend_on_the_worker_count() {
    let args = ["--builtin", "b01", "--height", "3", "relations-verify"];
    let one = spinklr(&[&["--jobs", "1"][..], &args].concat());
    let four = spinklr(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn tsv_and_out_file() {
    let path = std::env::temp_dir().join(format!("spinklr-cli-{}.tsv", std::process::id()));
    let out = spinklr(&["--builtin", "b01", "--format", "tsv", "--out", path.to_str().unwrap(), "type-m", "--height", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("path\tvalue\n"));
    assert!(text.lines().any(|l| l == "passed\ttrue"));
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(spinklr(&["--builtin", "osp12", "--degree-cap", "0", "validate"]).status.code(), Some(2));
    assert_eq!(spinklr(&["--builtin", "osp12", "pair", "--left", "x", "--right", "o"]).status.code(), Some(2));
}
