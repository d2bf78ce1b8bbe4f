mod common;

use std::time::{Duration, Instant};

use common::{default_report, fixture_text, names, report, FIXTURES};
use cosmax_core::report::{
    exit_code, parse_structured, render_structured, render_text, run, InputKind, PartialQuery, Quantity, RunConfig,
    EXIT_EXACT_COLLINEARITY, EXIT_INVALID_CONFIG, EXIT_PARSE,
};
use cosmax_core::{DiagnosticsReport, Error};

fn section<'a>(text: &'a str, title: &str) -> &'a str {
    let start = text.find(title).unwrap_or_else(|| panic!("missing section {title}"));
    let rest = &text[start..];
    let end = rest.find("\n\n").unwrap_or(rest.len());
    &rest[..end]
}

#[test]
fn structured_round_trip_is_exact() {
    for name in FIXTURES {
        let rep = default_report(name);
        let parsed: DiagnosticsReport<f64> = parse_structured(&render_structured(&rep)).unwrap();
        assert_eq!(parsed, rep, "{name}");
    }
}

#[test]
fn structured_output_is_reproducible() {
    for name in FIXTURES {
        assert_eq!(render_structured(&default_report(name)), render_structured(&default_report(name)));
        assert_eq!(render_text(&default_report(name)), render_text(&default_report(name)));
    }
}

#[test]
fn structured_vifs_are_bit_exact_and_config_is_echoed() {
    let rep = default_report("sales");
    let doc: serde_json::Value = serde_json::from_str(&render_structured(&rep)).unwrap();
    let vifs: Vec<f64> = doc["vifs"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert_eq!(vifs, rep.vifs);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["config"]["thresholds"]["vif"], 5.0);
    assert_eq!(doc["config"]["input_kind"], "correlation");
}

#[test]
fn text_agrees_with_structured_to_three_decimals() {
    for name in FIXTURES {
        let rep = default_report(name);
        let text = render_text(&rep);
        let table = section(&text, "Correlation matrix and VIFs");
        for (i, vif) in rep.vifs.iter().enumerate() {
            let line = table.lines().find(|l| l.starts_with(&format!("{} ", rep.names[i]))).unwrap();
            assert!(line.trim_end().ends_with(&format!("{vif:.3}")), "{name}: {line}");
        }
        let eigen = section(&text, "Eigenvectors, eigenvalues");
        let line = eigen.lines().find(|l| l.starts_with("cond. index")).unwrap();
        let printed: Vec<f64> = line.split_whitespace().skip(2).map(|v| v.parse().unwrap()).collect();
        for (p, c) in printed.iter().zip(&rep.eigen.condition_indices) {
            assert!((p - c).abs() <= 0.0005 + 1e-12);
        }
    }
}

#[test]
fn sales_vdp_cell_for_x3() {
    let text = render_text(&default_report("sales"));
    let table = section(&text, "Variance-decomposition proportions");
    let row = table.lines().find(|l| l.starts_with("0.007")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    // eigenvalue, condition index, X1, X2, X3, ...
    assert_eq!(cells[4], "0.012");
}

#[test]
fn pitprop_borderline_loading_is_marked() {
    let rep = default_report("pitprop");
    let text = render_text(&rep);
    let table = section(&text, "Cos-max transformation matrix");
    let a3 = table.lines().find(|l| l.starts_with("a3 ")).unwrap();
    let cells: Vec<&str> = a3.split_whitespace().collect();
    assert_eq!(cells[5], "0.592~");
    assert_eq!(cells[4], "-1.946*");
    assert!(rep.borderline.iter().any(|b| b.quantity == Quantity::CosmaxLoading
        && b.source == "X3"
        && b.variable == "X5"
        && (b.value - 0.592).abs() < 0.0005));
}

#[test]
fn uncorrelated_input_reports_nothing() {
    let text = "a b c\n1 0 0\n0 1 0\n0 0 1\n";
    let rep = run(&RunConfig::<f64>::default(), Some(text)).unwrap();
    assert!(rep.sets.is_empty());
    assert!(rep.is_clean());
    assert!(rep.stepwise.is_empty());
    assert!(render_text(&rep).contains("no collinearities detected"));
}

#[test]
fn exact_collinearity_from_noiseless_simulation() {
    let mut config = RunConfig::<f64>::default();
    config.input_kind = InputKind::Synthetic;
    config.synthetic.noise = 0.0;
    let err = run(&config, None).unwrap_err();
    assert!(matches!(err, Error::ExactCollinearity { .. }), "{err:?}");
    assert_eq!(exit_code(&err), EXIT_EXACT_COLLINEARITY);
}

#[test]
fn error_kinds_map_to_exit_codes() {
    let config = RunConfig::<f64>::default();
    let err = run(&config, Some("a b\n1 x\n0 1\n")).unwrap_err();
    assert_eq!(exit_code(&err), EXIT_PARSE);

    let mut bad = config.clone();
    bad.thresholds.vdp = 2.0;
    assert_eq!(exit_code(&run(&bad, Some(&fixture_text("sales.corr"))).unwrap_err()), EXIT_INVALID_CONFIG);

    let mut unknown = config.clone();
    unknown.stepwise_targets = Some(vec!["X99".into()]);
    assert_eq!(exit_code(&run(&unknown, Some(&fixture_text("sales.corr"))).unwrap_err()), EXIT_INVALID_CONFIG);

    assert_eq!(exit_code(&run(&config, None).unwrap_err()), EXIT_INVALID_CONFIG);
}

#[test]
fn partial_queries_resolve_names_and_positions() {
    let mut config = RunConfig::<f64>::default();
    config.partials = vec!["X2,X3|X4".parse().unwrap(), "6,7|5".parse().unwrap()];
    let rep = report("shopping", &config);
    assert_eq!(rep.partials.len(), 2);
    assert_eq!(rep.partials[1].i, "X6");
    assert_eq!(rep.partials[1].conditioning, vec!["X5".to_string()]);
    assert!((rep.partials[0].value - 0.073).abs() < 0.02);
    assert!((rep.partials[1].value - 0.153).abs() < 0.02);

    config.partials = vec![PartialQuery {
        i: "X2".into(),
        j: "X2".into(),
        conditioning: vec![],
    }];
    let err = run(&config, Some(&fixture_text("shopping.corr"))).unwrap_err();
    assert!(matches!(err, Error::InvalidConfig(_)));
}

#[test]
fn f_test_needs_observation_count() {
    // adding X9 when explaining X7 is significant at 0.001 with 180 props
    let mut config = RunConfig::<f64>::default();
    config.stepwise_targets = Some(vec!["X7".into()]);
    config.min_gain = 0.0;
    config.max_steps = Some(4);
    let rep = report("pitprop", &config);
    assert!(rep.stepwise[0].steps.iter().all(|s| s.p_value.is_none()));

    config.n_obs = Some(180);
    let rep = report("pitprop", &config);
    let steps = &rep.stepwise[0].steps;
    assert_eq!(steps[3].variable, "X9");
    assert!(steps[3].p_value.unwrap() < 0.001);
    assert!(steps[3].f_statistic.unwrap() > 10.0);
}

#[test]
fn default_stepwise_targets_are_high_vif_variables() {
    let rep = default_report("pitprop");
    let dependents: Vec<String> = rep.stepwise.iter().map(|t| t.dependent.clone()).collect();
    assert_eq!(dependents, names(&[1, 2, 3, 4, 6, 7, 10]));
}

#[test]
fn raw_data_reports_surrogate_orthonormality() {
    let rep = run(&common::raw_config(), Some(&fixture_text("example4.csv"))).unwrap();
    assert_eq!(rep.config.n_obs, Some(100));
    assert!(rep.cosmax.surrogate_orthonormality_error.unwrap() <= 1e-8);
    assert!(default_report("sales").cosmax.surrogate_orthonormality_error.is_none());
}

#[test]
fn fixtures_run_quickly() {
    for name in FIXTURES {
        let start = Instant::now();
        let _ = default_report(name);
        assert!(start.elapsed() < Duration::from_secs(1), "{name} took {:?}", start.elapsed());
    }
}
