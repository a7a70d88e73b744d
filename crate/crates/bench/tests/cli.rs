use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fogm::io::read_trace_csv;

fn fogm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fogm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bound_and_delta_print_twelve_digits() {
    let o = fogm(&["bound", "--rho", "0.01", "--mu", "2", "--alpha", "1.2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3.2e-09");
    let o = fogm(&["bound", "--rho", "0.01", "--mu", "2", "--alpha", "1.4"]);
    assert_eq!(stdout(&o).trim(), "5.65685424949e-05");
    let o = fogm(&["delta", "--rho", "0.1", "--mu", "2", "--alpha", "1.5"]);
    assert_eq!(stdout(&o).trim(), "0.04");
    let o = fogm(&["bound", "--rho", "2", "--mu", "1", "--alpha", "0.5", "--p", "0.3333333333333333"]);
    assert!(o.status.success());
}

#[test]
fn exit_codes() {
    let o = fogm(&["bound", "--rho", "0.01", "--mu", "2", "--alpha", "0.9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    assert_eq!(fogm(&["delta", "--rho", "0.1", "--mu", "2", "--alpha", "1"]).status.code(), Some(1));
    assert_eq!(fogm(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fogm(&["bound", "--rho", "x", "--mu", "2", "--alpha", "1.5"]).status.code(), Some(1));
    assert_eq!(fogm(&["--help"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(fogm(&["bench", "ex9", "--out", out]).status.code(), Some(1));
    // non-bracketing interval is a runtime failure
    let o = fogm(&[
        "estimate-order", "--objective", "quadratic:c=3", "--rho", "0.1",
        "--lo", "0.5", "--hi", "0.9", "--tol", "0.01",
    ]);
    assert_eq!(o.status.code(), Some(2));
    // singular step: alpha > 1 with delta = 0 from a repeated point
    let o = fogm(&[
        "run", "--objective", "quadratic:c=3", "--method", "fogm", "--alpha", "1.5",
        "--rho", "0.1", "--t1", "0", "--t2", "0", "--max-iter", "10", "--out", out,
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = fogm(&[
        "run", "--objective", "nope", "--method", "gm", "--rho", "0.1", "--t1", "0", "--out", out,
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = fogm(&["run", "--objective", "quadratic", "--method", "fogm", "--rho", "0.1", "--out", out]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn run_writes_round_trippable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r");
    let o = fogm(&[
        "run", "--objective", "quadratic:c=3", "--method", "modified", "--alpha", "1.5",
        "--rho", "0.1", "--delta", "0.04", "--t1", "-1", "--t2", "0", "--max-iter", "500",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("asymptotic"));
    let text = fs::read_to_string(out.join("trace.csv")).unwrap();
    let records = read_trace_csv::<f64, _>(text.as_bytes()).unwrap();
    assert!(!records.is_empty());
    let mut rewritten = Vec::new();
    let trace = fogm::Trace {
        records,
        termination: fogm::optimizers::Termination::ToleranceMet,
    };
    fogm::io::write_trace_csv(&trace, &mut rewritten).unwrap();
    assert_eq!(String::from_utf8(rewritten).unwrap(), text);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    for key in ["classification", "final_error", "oscillation_amplitude", "crossing_count", "theoretical_bound"] {
        assert!(report.get(key).is_some(), "{key}");
    }
    assert_eq!(report["termination"], "tolerance_met");
}

#[test]
fn run_accepts_json_config_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(
        &cfg,
        r#"{"method":"switching_fogm","alpha":0.7,"alpha_post":1.3,"rho":10.0,"delta":0.0,"t1":0.0,"t2":null}"#,
    )
    .unwrap();
    let out = dir.path().join("o");
    let o = fogm(&[
        "run", "--objective", "quadratic:c=100", "--config", cfg.to_str().unwrap(),
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("termination=tolerance_met"));
    let o = fogm(&[
        "run", "--objective", "quadratic:c=100", "--config", cfg.to_str().unwrap(),
        "--alpha2", "2.5", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn estimate_order_matches_known_threshold() {
    let o = fogm(&[
        "estimate-order", "--objective", "pow43:c=100", "--rho", "2",
        "--lo", "0.1", "--hi", "0.9", "--tol", "0.005",
    ]);
    assert!(o.status.success());
    let a: f64 = stdout(&o).trim().parse().unwrap();
    assert!((0.328..=0.338).contains(&a));
}

fn read_tree(root: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                let rel = p.strip_prefix(root).unwrap().display().to_string();
                out.push((rel, fs::read(&p).unwrap()));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn bench_is_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let o = fogm(&["bench", "ex3", "--out", dir.path().to_str().unwrap()]);
        assert!(o.status.success());
    }
    let (ta, tb) = (read_tree(a.path()), read_tree(b.path()));
    assert!(ta.iter().any(|(n, _)| n.ends_with("summary.csv")));
    assert_eq!(ta, tb);
}
