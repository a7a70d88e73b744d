use std::fs;

use fogm::analysis::Classification;
use fogm::io::read_trace_csv;
use fogm_bench::experiment::SUMMARY_HEADER;
use fogm_bench::{lookup, run_experiment, ExperimentSpec};

#[test]
fn ex3_summary_classes() {
    let dir = tempfile::tempdir().unwrap();
    let summary = run_experiment(&lookup("ex3").unwrap(), dir.path()).unwrap();
    assert_eq!(summary.classification("modified_d0.04"), Some(Classification::Asymptotic));
    assert_eq!(summary.classification("modified_d0"), Some(Classification::BoundedOscillation));
    let csv = fs::read_to_string(dir.path().join("ex3/summary.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(SUMMARY_HEADER));
    assert_eq!(lines.count(), 4);
}

#[test]
fn ex5_gm_diverges_and_switching_converges() {
    let dir = tempfile::tempdir().unwrap();
    let summary = run_experiment(&lookup("ex5").unwrap(), dir.path()).unwrap();
    assert_eq!(summary.classification("gm_rho10"), Some(Classification::Diverged));
    for rho in ["0.01", "0.1", "1", "10", "100"] {
        assert_eq!(
            summary.classification(&format!("switching_rho{rho}")),
            Some(Classification::Asymptotic)
        );
    }
}

#[test]
fn empty_spec_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let spec = ExperimentSpec::new("empty", "quadratic:c=0");
    let summary = run_experiment(&spec, dir.path()).unwrap();
    assert!(summary.runs.is_empty());
    let csv = fs::read_to_string(dir.path().join("empty/summary.csv")).unwrap();
    assert_eq!(csv, format!("{SUMMARY_HEADER}\n"));
}

#[test]
fn diverged_sibling_does_not_change_outputs() {
    let full = lookup("ex2").unwrap();
    let mut trimmed = full.clone();
    trimmed.configs.retain(|c| c.id != "gm_rho10");
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let sa = run_experiment(&full, a.path()).unwrap();
    run_experiment(&trimmed, b.path()).unwrap();
    assert_eq!(sa.classification("gm_rho10"), Some(Classification::Diverged));
    for c in &trimmed.configs {
        for file in ["trace.csv", "report.json"] {
            let x = fs::read(a.path().join("ex2").join(&c.id).join(file)).unwrap();
            let y = fs::read(b.path().join("ex2").join(&c.id).join(file)).unwrap();
            assert_eq!(x, y, "{}/{file}", c.id);
        }
    }
}

#[test]
fn failing_config_is_recorded_not_fatal() {
    let mut spec = ExperimentSpec::new("mixed", "pow43:c=1");
    let entries: Vec<_> = lookup("ex5").unwrap().configs.into_iter().take(2).collect();
    spec.configs = entries;
    let dir = tempfile::tempdir().unwrap();
    let summary = run_experiment(&spec, dir.path()).unwrap();
    let switching = summary.run("switching_rho0.01").unwrap();
    assert!(switching.error.as_deref().unwrap().contains("lipschitz_mu"));
    assert!(summary.run("gm_rho0.01").unwrap().report.is_some());
    let csv = fs::read_to_string(dir.path().join("mixed/summary.csv")).unwrap();
    assert!(csv.contains("switching_rho0.01,error,,,,"));
    assert!(fs::read_to_string(dir.path().join("mixed/notes.txt")).unwrap().contains("run failed"));
}

#[test]
fn invalid_config_stops_before_running() {
    let mut spec = lookup("ex1").unwrap();
    spec.configs[2].config.rho = -1.0;
    let dir = tempfile::tempdir().unwrap();
    let err = run_experiment(&spec, dir.path()).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    assert!(!dir.path().join("ex1").exists());
}

#[test]
fn every_trace_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let spec = lookup("ex4").unwrap();
    run_experiment(&spec, dir.path()).unwrap();
    for c in &spec.configs {
        let path = dir.path().join("ex4").join(&c.id).join("trace.csv");
        let text = fs::read_to_string(&path).unwrap();
        let records = read_trace_csv::<f64, _>(text.as_bytes()).unwrap();
        let trace = fogm::Trace { records, termination: fogm::optimizers::Termination::MaxIterReached };
        let mut again = Vec::new();
        fogm::io::write_trace_csv(&trace, &mut again).unwrap();
        assert_eq!(again, text.as_bytes());
    }
    let notes = fs::read_to_string(dir.path().join("ex4/notes.txt")).unwrap();
    assert!(notes.contains("representative"));
}
