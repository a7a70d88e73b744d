use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use fogm::analysis::{
    classify, estimate_convexity_order, theoretical_bound, Classification, DEFAULT_WINDOW,
};
use fogm::io::write_trace_csv;
use fogm::objective::parse_objective;
use fogm::optimizers::{Method, Termination};
use fogm::{ConvergenceReport, FogmError, OptimizerConfig, ScalarObjective, Trace};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{BenchError, Result};
use crate::format::{g12, g12_opt};
use crate::registry::{ConfigEntry, ExperimentSpec};

/// Iterates per config kept in `figure.csv`.
pub const FIGURE_STEPS: usize = 1000;

pub const SUMMARY_HEADER: &str = "config_id,classification,final_error,amplitude,crossings,bound";

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub config_id: String,
    pub objective: String,
    pub config: OptimizerConfig,
    pub termination: Option<Termination>,
    pub iterations: usize,
    #[serde(flatten)]
    pub report: Option<ConvergenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub error: Option<String>,
}

impl RunReport {
    pub fn summary_row(&self) -> String {
        match &self.report {
            Some(r) => format!(
                "{},{},{},{},{},{}",
                self.config_id,
                r.classification.as_str(),
                g12(r.final_error),
                g12_opt(r.oscillation_amplitude),
                r.crossing_count,
                g12_opt(r.theoretical_bound),
            ),
            None => format!("{},error,,,,", self.config_id),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderProbe {
    pub alpha: f64,
    pub classification: Classification,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    pub objective: String,
    pub alpha_star: Option<f64>,
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub probes: Vec<OrderProbe>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub experiment: String,
    pub runs: Vec<RunReport>,
    pub order: Option<OrderReport>,
}

impl Summary {
    pub fn run(&self, config_id: &str) -> Option<&RunReport> {
        self.runs.iter().find(|r| r.config_id == config_id)
    }

    pub fn classification(&self, config_id: &str) -> Option<Classification> {
        self.run(config_id)?.report.map(|r| r.classification)
    }
}

/// Convergence-region radius for plain FOGM runs whose objective carries
/// both a global Lipschitz constant and its order.
pub fn bound_for(obj: &ScalarObjective, cfg: &OptimizerConfig) -> Option<f64> {
    let plain = match cfg.method {
        Method::Fogm => true,
        Method::ModifiedFogm => cfg.delta == 0.0,
        _ => false,
    };
    let meta = obj.metadata();
    let (mu, p) = (meta.lipschitz_mu?, meta.lipschitz_order?);
    if !plain || cfg.alpha <= p {
        return None;
    }
    theoretical_bound(cfg.rho, mu, cfg.alpha, p).ok()
}

/// Runs one configuration and reports on it. The reference point is the
/// objective's extremum, or the final iterate when none is known.
pub fn evaluate(
    obj: &ScalarObjective,
    cfg: &OptimizerConfig,
) -> fogm::Result<(Trace, ConvergenceReport)> {
    let trace = fogm::optimizers::run(obj, cfg)?;
    let t_star = obj.extremum().unwrap_or_else(|| trace.last().t);
    let report = classify(&trace, t_star, DEFAULT_WINDOW).with_bound(bound_for(obj, cfg));
    Ok((trace, report))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| BenchError::io(path, e))
}

fn write_json<S: Serialize>(path: &Path, value: &S) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| BenchError::Json(e.to_string()))?;
    writeln!(w).and_then(|_| w.flush()).map_err(|e| BenchError::io(path, e))
}

struct Outcome {
    report: RunReport,
    figure: Vec<(usize, f64, f64)>,
}

fn run_entry(
    spec: &ExperimentSpec,
    entry: &ConfigEntry,
    obj: &ScalarObjective,
    dir: &Path,
) -> Result<Outcome> {
    let objective = entry.objective_id.clone().unwrap_or_else(|| spec.objective_id.clone());
    let mut report = RunReport {
        config_id: entry.id.clone(),
        objective,
        config: entry.config,
        termination: None,
        iterations: 0,
        report: None,
        note: entry.note.clone(),
        error: None,
    };
    let mut figure = Vec::new();
    let run_dir = dir.join(&entry.id);
    fs::create_dir_all(&run_dir).map_err(|e| BenchError::io(&run_dir, e))?;
    match evaluate(obj, &entry.config) {
        Ok((trace, conv)) => {
            report.termination = Some(trace.termination);
            report.iterations = trace.len();
            report.report = Some(conv);
            let t_star = obj.extremum().unwrap_or_else(|| trace.last().t);
            figure = trace
                .records
                .iter()
                .take(FIGURE_STEPS)
                .map(|r| (r.k, r.t, r.t - t_star))
                .collect();
            if spec.outputs.trace_csv {
                let path = run_dir.join("trace.csv");
                write_trace_csv(&trace, create(&path)?).map_err(|e| match e {
                    FogmError::Io(msg) => BenchError::Io { path: path.clone(), msg },
                    other => BenchError::Core(other),
                })?;
            }
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    if spec.outputs.report_json {
        write_json(&run_dir.join("report.json"), &report)?;
    }
    Ok(Outcome { report, figure })
}

fn run_order_search(spec: &ExperimentSpec) -> Option<OrderReport> {
    let search = spec.order_search.as_ref()?;
    let mut out = OrderReport {
        objective: spec.objective_id.clone(),
        alpha_star: None,
        lo: None,
        hi: None,
        probes: Vec::new(),
        error: None,
    };
    let result = parse_objective::<f64>(&spec.objective_id).and_then(|obj| {
        estimate_convexity_order(&obj, &search.template, search.lo, search.hi, search.tol)
    });
    match result {
        Ok(est) => {
            out.alpha_star = Some(est.alpha_star);
            out.lo = Some(est.lo);
            out.hi = Some(est.hi);
            out.probes = est
                .probes
                .into_iter()
                .map(|(alpha, classification)| OrderProbe { alpha, classification })
                .collect();
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    Some(out)
}

/// Validates every config, runs them in parallel and writes
/// `<out>/<id>/{<config>/trace.csv, <config>/report.json, summary.csv,
/// figure.csv, notes.txt}` plus `order.json` when an order search is set.
pub fn run_experiment(spec: &ExperimentSpec, out_dir: &Path) -> Result<Summary> {
    let mut objectives = Vec::with_capacity(spec.configs.len());
    for entry in &spec.configs {
        entry
            .config
            .validate()
            .map_err(|e| BenchError::Invalid(format!("{}/{}: {e}", spec.id, entry.id)))?;
        let id = entry.objective_id.as_deref().unwrap_or(&spec.objective_id);
        let obj = parse_objective::<f64>(id)
            .map_err(|e| BenchError::Invalid(format!("{}/{}: {e}", spec.id, entry.id)))?;
        objectives.push(obj);
    }
    let dir: PathBuf = out_dir.join(&spec.id);
    fs::create_dir_all(&dir).map_err(|e| BenchError::io(&dir, e))?;

    let outcomes: Vec<Outcome> = spec
        .configs
        .par_iter()
        .zip(objectives.par_iter())
        .map(|(entry, obj)| run_entry(spec, entry, obj, &dir))
        .collect::<Result<_>>()?;
    let order = run_order_search(spec);

    if spec.outputs.summary_table {
        let path = dir.join("summary.csv");
        let mut w = create(&path)?;
        let mut body = String::from(SUMMARY_HEADER);
        body.push('\n');
        for o in &outcomes {
            body.push_str(&o.report.summary_row());
            body.push('\n');
        }
        w.write_all(body.as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| BenchError::io(&path, e))?;
    }

    let path = dir.join("figure.csv");
    let mut w = create(&path)?;
    let mut body = String::from("config_id,k,t,error\n");
    for o in &outcomes {
        for &(k, t, err) in &o.figure {
            body.push_str(&format!("{},{k},{t},{err}\n", o.report.config_id));
        }
    }
    w.write_all(body.as_bytes())
        .and_then(|_| w.flush())
        .map_err(|e| BenchError::io(&path, e))?;

    let mut notes: Vec<String> = spec.notes.clone();
    for o in &outcomes {
        if let Some(n) = &o.report.note {
            notes.push(format!("{}: {n}", o.report.config_id));
        }
        if let Some(e) = &o.report.error {
            notes.push(format!("{}: run failed: {e}", o.report.config_id));
        }
    }
    if let Some(order) = &order {
        write_json(&dir.join("order.json"), order)?;
        match (order.alpha_star, &order.error) {
            (Some(a), _) => notes.push(format!("order estimate alpha* = {}", g12(a))),
            (None, Some(e)) => notes.push(format!("order search failed: {e}")),
            _ => {}
        }
    }
    if !notes.is_empty() {
        let path = dir.join("notes.txt");
        let text: String = notes.iter().map(|n| format!("{n}\n")).collect();
        fs::write(&path, text).map_err(|e| BenchError::io(&path, e))?;
    }

    Ok(Summary {
        experiment: spec.id.clone(),
        runs: outcomes.into_iter().map(|o| o.report).collect(),
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fogm::objective::{power_four_thirds, quadratic};

    #[test]
    fn bound_only_for_plain_fogm_above_order() {
        let q = quadratic(3.0);
        assert!(bound_for(&q, &OptimizerConfig::fogm(1.2, 0.01, 0.0)).is_some());
        assert!(bound_for(&q, &OptimizerConfig::fogm(1.0, 0.01, 0.0)).is_none());
        assert!(bound_for(&q, &OptimizerConfig::modified(1.5, 0.1, 0.04, 0.0)).is_none());
        assert!(bound_for(&q, &OptimizerConfig::modified(1.5, 0.1, 0.0, 0.0)).is_some());
        assert!(bound_for(&q, &OptimizerConfig::gm(0.1, 0.0)).is_none());
        assert!(bound_for(&power_four_thirds(100.0), &OptimizerConfig::fogm(0.5, 2.0, 0.0)).is_none());
    }

    #[test]
    fn error_row_keeps_columns() {
        let r = RunReport {
            config_id: "x".into(),
            objective: "quadratic".into(),
            config: OptimizerConfig::gm(0.1, 0.0),
            termination: None,
            iterations: 0,
            report: None,
            note: None,
            error: Some("boom".into()),
        };
        assert_eq!(r.summary_row(), "x,error,,,,");
    }
}
