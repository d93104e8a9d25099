use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borwein"))
        .args(args)
        .env_remove("BORWEIN_PRECISION")
        .output()
        .expect("spawn borwein")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = run(args);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn assert_valid(report: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(report) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    panic!("schema violations: {msgs:#?}");
}

#[test]
fn coeffs_csv() {
    let o = run(&["coeffs", "--p", "3", "--delta", "1", "--order", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,numerator,denominator");
    assert_eq!(lines.len(), 8);
    assert_eq!(*lines.last().unwrap(), "6,2,1");
}

#[test]
fn coeffs_trivial_and_vanishing() {
    let (v, code) = json(&["coeffs", "--p", "3", "--delta", "0", "--order", "3"]);
    assert_eq!(code, 0);
    assert_valid(&v);
    let nums: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["numerator"].as_str().unwrap()).collect();
    assert_eq!(nums, ["1", "0", "0", "0"]);

    let (v, _) = json(&["coeffs", "--p", "3", "--delta", "3", "--order", "8"]);
    for n in [2, 5, 8] {
        assert_eq!(v["rows"][n]["numerator"], "0");
    }
}

#[test]
fn rational_coefficients_are_exact_strings() {
    let (v, _) = json(&["coeffs", "--p", "2", "--delta", "1/2", "--order", "4"]);
    assert_valid(&v);
    assert_eq!(v["rows"][1]["numerator"], "-1");
    assert_eq!(v["rows"][1]["denominator"], "2");
    assert_eq!(v["config"]["params"]["delta"], "1/2");
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(run(&["coeffs", "--p", "1", "--delta", "1", "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--p", "3", "--delta", "-1", "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--p", "3", "--delta", "x", "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--precision", "52", "coeffs", "--p", "3", "--delta", "1", "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "vanishing", "--k", "4"]).status.code(), Some(2));
}

#[test]
fn estimate_rows_within_bound() {
    let (v, code) = json(&["estimate", "--p", "3", "--delta", "1", "--n", "1..100", "--big-n", "2"]);
    assert_eq!(code, 0);
    assert_valid(&v);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r["within_bound"] == true));
}

#[test]
fn estimate_hypothesis_boundary() {
    let ok = run(&["estimate", "--p", "2", "--delta", "24", "--n", "2..5", "-N", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["estimate", "--p", "2", "--delta", "24.0001", "--n", "2..5", "-N", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn estimate_signs_in_corollary_regime() {
    let (v, code) = json(&["estimate", "--p", "3", "--delta", "3", "--n", "158..200", "-N", "3", "--parallelism", "3"]);
    assert_eq!(code, 0);
    for r in v["rows"].as_array().unwrap() {
        assert_eq!(r["predicted_sign"], r["actual_sign"], "n={}", r["n"]);
    }
}

#[test]
fn verify_main_k2() {
    let (v, code) = json(&["verify", "--suite", "main", "--k", "2", "--order", "200"]);
    assert_eq!(code, 0);
    assert_valid(&v);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["passed"], true);
    assert_eq!(checks[0]["residual"], "0/1");
}

#[test]
fn conjecture1_outside_range_is_exploratory() {
    let (v, code) = json(&["verify", "--suite", "conjecture1", "--delta", "1/5", "--order", "300"]);
    assert_eq!(code, 0);
    assert_valid(&v);
    let c = &v["checks"][0];
    assert_eq!(c["asserted"], false);
    assert_eq!(c["passed"], false);
    assert_eq!(v["verdicts"]["all_passed"], true);
}

#[test]
fn exploratory_sign_pattern_does_not_fail() {
    let (v, code) = json(&["verify", "--suite", "signs", "--p", "3", "--delta", "1/2", "--order", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["asserted"], false);
}

#[test]
fn verify_output_is_deterministic_and_order_preserving() {
    let args = ["verify", "--suite", "transform", "--format", "csv"];
    let serial = run(&args);
    let parallel = run(&[&args[..], &["--parallelism", "4"]].concat());
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    assert!(stdout(&serial).starts_with("suite,name,asserted,passed,residual,detail\n"));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_borwein"))
        .args(["verify", "--suite", "lambert"])
        .env("BORWEIN_PRECISION", "200")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["precision_bits"], 200);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn text_format_summary() {
    let o = run(&["verify", "--suite", "two-squares", "--order", "100", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verify: ok\n"));
}

#[test]
fn verify_all_small_order() {
    let (v, code) = json(&["verify", "--suite", "all", "--order", "170", "--parallelism", "4"]);
    assert_eq!(code, 0, "{:#}", v["verdicts"]);
    assert_valid(&v);
}
