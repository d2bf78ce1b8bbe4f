use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(file)
}

fn cosmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosmax")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = cosmax(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn text_report_for_sales() {
    let path = fixture("sales.corr");
    let out = cosmax(&["--correlation", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Cos-max transformation matrix"));
    assert!(text.contains("Collinear sets"));
}

#[test]
fn json_report_carries_sets_and_config() {
    let path = fixture("pitprop.corr");
    let doc = json(&["--correlation", path.to_str().unwrap(), "--format", "json", "--loading-threshold", "0.59"]);
    assert_eq!(doc["config"]["thresholds"]["loading"], 0.59);
    let sets = doc["sets"].as_array().unwrap();
    assert!(sets.iter().any(|s| s["method"] == "cosmax" && s["members"] == serde_json::json!(["X3", "X4", "X5"])));
}

#[test]
fn partial_and_stepwise_options() {
    let path = fixture("shopping.corr");
    let doc = json(&[
        "--correlation",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--partial",
        "X2,X3|X4",
        "--partial",
        "6,7|5",
        "--stepwise",
        "X5",
    ]);
    let partials = doc["partials"].as_array().unwrap();
    assert_eq!(partials.len(), 2);
    assert!((partials[0]["value"].as_f64().unwrap() - 0.073).abs() < 0.02);
    let stepwise = doc["stepwise"].as_array().unwrap();
    assert_eq!(stepwise.len(), 1);
    assert_eq!(stepwise[0]["dependent"], "X5");
}

#[test]
fn written_data_reproduces_the_synthetic_run() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sim.csv");
    let file = file.to_str().unwrap();
    let synthetic = json(&["--synthetic", "--seed", "7", "--format", "json", "--write-data", file]);
    let written = std::fs::read_to_string(file).unwrap();
    assert!(written.starts_with("# simulated: seed 7, n 100"));
    let from_file = json(&["--data", file, "--format", "json"]);
    assert_eq!(synthetic["vifs"], from_file["vifs"]);
    assert_eq!(synthetic["sets"], from_file["sets"]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let malformed = dir.path().join("bad.corr");
    std::fs::write(&malformed, "a b\n1 x\n0 1\n").unwrap();
    let malformed = malformed.to_str().unwrap();
    let sales = fixture("sales.corr");
    let sales = sales.to_str().unwrap();

    assert_eq!(cosmax(&["--correlation", malformed]).status.code(), Some(2));
    assert_eq!(cosmax(&["--correlation", "/nonexistent/file.corr"]).status.code(), Some(2));
    assert_eq!(cosmax(&["--synthetic", "--noise", "0"]).status.code(), Some(3));
    assert_eq!(cosmax(&["--correlation", sales, "--vdp-threshold", "2"]).status.code(), Some(4));
    assert_eq!(cosmax(&["--correlation", sales, "--partial", "X1"]).status.code(), Some(4));
    assert_eq!(cosmax(&["--correlation", sales, "--data", sales]).status.code(), Some(4));
    assert_eq!(cosmax(&[]).status.code(), Some(4));
    assert_eq!(cosmax(&["--help"]).status.code(), Some(0));
}

#[test]
fn errors_go_to_stderr() {
    let out = cosmax(&["--correlation", "/nonexistent/file.corr"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
