use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covquot")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn group_info_for_a_three_cycle() {
    let v = json(&["group-info", "--input", r#"{"degree": 3, "generators": [[1, 2, 0]]}"#]);
    assert_eq!(v["order"], 3);
    assert_eq!(v["n"], 1);
    assert_eq!(v["solvable"], true);
}

#[test]
fn group_info_for_s3() {
    let v = json(&["group-info", "--input", r#"{"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#]);
    assert_eq!(v["order"], 6);
    assert_eq!(v["n"], 2);
    assert_eq!(v["derived_series"], serde_json::json!([6, 3, 1]));
}

#[test]
fn malformed_input_is_rejected_with_position() {
    let out = run(&["group-info", "--input", "{\"degree\": 3,\n \"generators\": [[1, 2"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let out = run(&["group-info", "--input", r#"{"degree": 3, "generators": [[1, 2, 0]], "extra": 1}"#]);
    assert!(!out.status.success());
}

#[test]
fn cohomology_reports() {
    // coprime coefficients
    let v = json(&[
        "cohomology",
        "--input",
        r#"{"module": {"l": 5, "dim": 1, "generator_matrices": [[[1]]], "group": {"catalog": "C3"}}}"#,
    ]);
    assert_eq!((v["h1"].clone(), v["h2"].clone()), (0.into(), 0.into()));
    // C2 on F2
    let v = json(&[
        "cohomology",
        "--input",
        r#"{"module": {"l": 2, "dim": 1, "generator_matrices": [[[1]]], "group": {"catalog": "C2"}}, "cocycle": [1]}"#,
    ]);
    assert_eq!((v["h1"].clone(), v["h2"].clone()), (1.into(), 1.into()));
    assert_eq!(v["class"]["split"], false);
    // not a representation of C2
    let out = run(&[
        "cohomology",
        "--input",
        r#"{"module": {"l": 2, "dim": 2, "generator_matrices": [[[0, 1], [1, 1]]], "group": {"catalog": "C2"}}}"#,
    ]);
    assert!(!out.status.success());
}

#[test]
fn realizability_decisions() {
    let v = json(&["realizability", "--input", r#"{"signature": {"g": 0, "r": 1, "p": 0}, "group": {"catalog": "C2"}}"#]);
    assert_eq!(v["realizable"], false);
    assert_eq!(v["bound"], 0);
    let v = json(&["realizability", "--input", r#"{"signature": {"g": 0, "r": 2, "p": 0}, "group": {"catalog": "C5"}}"#]);
    assert_eq!(v["realizable"], true);
    let out = run(&["realizability", "--input", r#"{"signature": {"g": 1, "r": 1, "p": 3}, "group": {"catalog": "S3"}}"#]);
    assert!(!out.status.success());
    let out = run(&["realizability", "--input", r#"{"signature": {"g": 1, "r": 1, "p": 7}, "group": {"catalog": "A5"}}"#]);
    assert!(!out.status.success());
    let v = json(&[
        "realizability",
        "--override-nonsolvable",
        "--input",
        r#"{"signature": {"g": 1, "r": 1, "p": 7}, "group": {"catalog": "A5"}}"#,
    ]);
    assert_eq!(v["realizable"], true);
    assert!(v["warning"].is_string());
}

#[test]
fn tower_certificates() {
    let v = json(&["tower", "--input", r#"{"signature": {"g": 0, "r": 2, "p": 0}, "group": {"catalog": "C1"}}"#]);
    assert_eq!(v["steps"], serde_json::json!([]));
    assert_eq!(v["verdict"], true);
    let v = json(&["tower", "--input", r#"{"signature": {"g": 0, "r": 3, "p": 0}, "group": {"catalog": "S3"}}"#]);
    assert_eq!(v["order"], 6);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["verdict_matches_decision"], true);
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
    let v = json(&["tower", "--input", r#"{"signature": {"g": 0, "r": 2, "p": 0}, "group": {"catalog": "S3"}}"#]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["first_failing_step"], 1);
}

#[test]
fn gos_reports() {
    let v = json(&["gos", "--input", r#"{"genus": 1, "dim_generic": 3}"#]);
    assert_eq!(v["chi"], 0);
    let wild = r#"{"genus": 1, "punctures": 1, "dim_generic": 1, "points": [{"group": {"catalog": "C2"},
        "chain": [[0, 1], [0, 1]], "module": {"l": 3, "dim": 1, "generator_matrices": [[[2]]]}, "stalk_dim": 0}]}"#;
    let v = json(&["gos", "--input", wild]);
    assert_eq!(v["swans"], serde_json::json!(["1"]));
    assert_eq!(v["chi"], -2);
}

#[test]
fn reports_are_byte_identical_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.json");
    std::fs::write(&input, r#"{"signature": {"g": 1, "r": 2, "p": 5}, "group": {"catalog": "SL(2,3)"}}"#).unwrap();
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let path = dir.path().join(format!("out{i}.json"));
            let out = run(&["tower", "--input", input.to_str().unwrap(), "--output", path.to_str().unwrap()]);
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
            std::fs::read(path).unwrap()
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert!(!outputs[0].is_empty());
}

#[test]
fn budgets_must_be_positive_and_are_enforced() {
    let out = run(&["group-info", "--budget-tuples", "0", "--input", r#"{"catalog": "S3"}"#]);
    assert!(!out.status.success());
    let out = run(&["group-info", "--budget-group-size", "10", "--input", r#"{"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]}"#]);
    assert!(!out.status.success());
}

#[test]
fn verify_suite_passes() {
    let v = json(&["verify-suite"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 8);
}
