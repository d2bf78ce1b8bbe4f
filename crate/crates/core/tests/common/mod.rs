#![allow(dead_code)]

use std::path::PathBuf;

use cosmax_core::report::{run, InputKind, RunConfig};
use cosmax_core::{load_matrix, CorrelationMatrix, DiagnosticsReport};

pub const FIXTURES: [&str; 4] = ["sales", "pitprop", "shopping", "artificial"];

pub fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(file)
}

pub fn fixture_text(file: &str) -> String {
    std::fs::read_to_string(fixture_path(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn matrix(name: &str) -> CorrelationMatrix<f64> {
    load_matrix(&fixture_text(&format!("{name}.corr"))).unwrap()
}

pub fn report(name: &str, config: &RunConfig<f64>) -> DiagnosticsReport<f64> {
    run(config, Some(&fixture_text(&format!("{name}.corr")))).unwrap()
}

pub fn default_report(name: &str) -> DiagnosticsReport<f64> {
    report(name, &RunConfig::default())
}

pub fn raw_config() -> RunConfig<f64> {
    RunConfig {
        input_kind: InputKind::RawData,
        ..RunConfig::default()
    }
}

/// 1-based variable numbers to 0-based indices.
pub fn idx(vars: &[usize]) -> Vec<usize> {
    vars.iter().map(|v| v - 1).collect()
}

pub fn names(vars: &[usize]) -> Vec<String> {
    vars.iter().map(|v| format!("X{v}")).collect()
}

pub fn close(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol
}

#[track_caller]
pub fn assert_close(actual: f64, expected: f64, tol: f64, what: &str) {
    assert!(
        close(actual, expected, tol),
        "{what}: got {actual}, expected {expected} within {tol}"
    );
}

pub mod random;
