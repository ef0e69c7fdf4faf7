//! End-to-end tests of the `findim` binary: commands, flags, exit codes,
//! output determinism.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn findim(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_findim"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("writable temp dir");
    path.to_string_lossy().into_owned()
}

const EXAMPLE_FINITE: &str = r#"{"n":2,"generators":[
    {"delta":{"p":[1,0],"beta":["1","-1"]}},
    {"delta":{"p":[0,1],"beta":["0","1"]}}
]}"#;

const EXAMPLE_INFINITE: &str = r#"{"n":2,"generators":[
    {"nabla":{"i":1,"a":[0,2]}},
    {"nabla":{"i":2,"a":[1,0]}}
]}"#;

#[test]
fn decide_finite_pair() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    let out = findim(&["decide", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("verdict: finite"));
    assert!(stdout.contains("ordering: D1, D2"));
    assert!(stdout.contains("r(D1, D2) = 1"));
}

#[test]
fn decide_json_schema() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    let out = findim(&["decide", "--json", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verdict"], "finite");
    assert_eq!(value["kind"], "type-ii");
    assert_eq!(value["order"], serde_json::json!([1, 2]));
    assert_eq!(value["r_table"][0]["r"], "1");
}

#[test]
fn closure_cap_exceeded_exits_two() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_INFINITE);
    let out = findim(&["closure", "--max-weight", "20", &input], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("cap exceeded"));
    assert!(stdout.contains("cap: weight"));
}

#[test]
fn closure_json_reports_dimension() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    let out = findim(&["closure", "--json", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["status"], "closed");
    assert_eq!(value["dimension"], 3);
    assert_eq!(value["series"]["nilpotency_class"], 2);
    assert_eq!(value["model_filiform"]["filiform"], true);
    // Rationals are exact strings.
    assert_eq!(value["basis"][0]["coeffs"], serde_json::json!(["0", "1"]));
    // The input generators are traceable in basis coordinates.
    assert_eq!(
        value["generators"][0]["coords"],
        serde_json::json!([{"basis_index": 2, "value": "1"}])
    );
}

#[test]
fn classify_laurent_only_generator() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "in.json",
        r#"{"n":2,"generators":[{"raw":{"c":[-1,-1],"alpha":["1","0"]}}]}"#,
    );
    let out = findim(&["classify", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("laurent-only"));
}

#[test]
fn graph_dot_output_is_golden() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    let out = findim(&["graph", "--dot", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let expected =
        "digraph {\n  1 [label=\"x1^2*d1 - x1*x2*d2\"];\n  2 [label=\"x2^2*d2\"];\n  1 -> 2;\n}\n";
    assert_eq!(stdout, expected);
}

#[test]
fn graph_on_mixed_set_exits_two() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "in.json",
        r#"{"n":2,"generators":[
            {"nabla":{"i":1,"a":[0,1]}},
            {"delta":{"p":[1,1],"beta":["2","-1"]}}
        ]}"#,
    );
    let out = findim(&["graph", &input], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let decide_out = findim(&["decide", &input], dir.path());
    assert_eq!(decide_out.status.code(), Some(2));
    let stdout = String::from_utf8(decide_out.stdout).unwrap();
    assert!(stdout.contains("verdict: undecided"));
}

#[test]
fn empty_generator_set_is_finite() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", r#"{"n":1,"generators":[]}"#);
    let out = findim(&["decide", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dimension 0"));

    let out = findim(&["graph", "--dot", &input], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "digraph {\n}\n");
}

#[test]
fn closure_cap_misconfiguration_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    let out = findim(&["closure", "--max-weight", "0", &input], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("weight cap"));

    let out = findim(&["closure", "--max-elements", "1", &input], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_one_with_code() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "in.json",
        r#"{"n":2,"generators":[{"nabla":{"i":1,"a":[1,0]}}]}"#,
    );
    let out = findim(&["decide", &input], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("exponent-at-own-variable"));

    let out = findim(&["decide", "no-such-file.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_command_exits_one_with_usage() {
    let dir = TempDir::new().unwrap();
    let out = findim(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("Usage"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_FINITE);
    for args in [
        vec!["report", "--json", &input],
        vec!["report", "--dot", &input],
        vec!["decide", &input],
        vec!["closure", &input],
    ] {
        let first = findim(&args, dir.path());
        let second = findim(&args, dir.path());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn report_aggregates_and_propagates_indeterminacy() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in.json", EXAMPLE_INFINITE);
    // The decision section has a verdict, but the closure section trips its
    // cap, so the report exits 2.
    let out = findim(&["report", "--max-weight", "20", &input], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("verdict: infinite"));
    assert!(stdout.contains("cap exceeded"));

    let finite_input = write(dir.path(), "fin.json", EXAMPLE_FINITE);
    let out = findim(&["report", &finite_input], dir.path());
    assert_eq!(out.status.code(), Some(0));
}
