use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fogm::analysis::{estimate_convexity_order, recommend_delta, theoretical_bound};
use fogm::io::write_trace_csv;
use fogm::objective::parse_objective;
use fogm::optimizers::Method;
use fogm::OptimizerConfig;

use crate::error::{BenchError, Result};
use crate::experiment::{evaluate, run_experiment, RunReport};
use crate::format::{g12, g12_opt};
use crate::registry::{lookup, registry};

#[derive(Debug, Parser)]
#[command(name = "fogm", version, about = "Fractional-order gradient method experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a built-in experiment (ex1..ex6) or all of them.
    Bench {
        id: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a single configuration.
    Run(RunArgs),
    /// Print the convergence-region radius (rho*mu)^(1/(alpha-p)).
    Bound {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
    },
    /// Print the regularizer (rho*mu)^(1/(alpha-1)).
    Delta {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Bisect for the critical FOGM order of an objective.
    EstimateOrder {
        #[arg(long)]
        objective: String,
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        tol: f64,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t2: f64,
        #[arg(long)]
        max_iter: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub objective: String,
    /// JSON file holding an optimizer config; flags below override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub method: Option<Method>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Post-switch order for the switching method.
    #[arg(long)]
    pub alpha2: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: Option<f64>,
    #[arg(long)]
    pub max_iter: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

impl RunArgs {
    pub fn to_config(&self) -> Result<OptimizerConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
                serde_json::from_str::<OptimizerConfig>(&text)
                    .map_err(|e| BenchError::Invalid(format!("{}: {e}", path.display())))?
            }
            None => {
                let missing = |flag: &str| BenchError::Invalid(format!("--{flag} is required without --config"));
                let method = self.method.ok_or_else(|| missing("method"))?;
                let rho = self.rho.ok_or_else(|| missing("rho"))?;
                let t1 = self.t1.ok_or_else(|| missing("t1"))?;
                let alpha = if method == Method::Gm {
                    self.alpha.unwrap_or(1.0)
                } else {
                    self.alpha.ok_or_else(|| missing("alpha"))?
                };
                let mut cfg = OptimizerConfig::fogm(alpha, rho, t1);
                cfg.method = method;
                cfg
            }
        };
        if let Some(m) = self.method {
            cfg.method = m;
        }
        if let Some(a) = self.alpha {
            cfg.alpha = a;
        }
        if self.alpha2.is_some() {
            cfg.alpha_post = self.alpha2;
        }
        if let Some(r) = self.rho {
            cfg.rho = r;
        }
        if let Some(d) = self.delta {
            cfg.delta = d;
        }
        if let Some(t) = self.t1 {
            cfg.t1 = t;
        }
        if self.t2.is_some() {
            cfg.t2 = self.t2;
        }
        if let Some(n) = self.max_iter {
            cfg.max_iter = n;
        }
        if let Some(t) = self.tol {
            cfg.tol_abs = t;
        }
        if let Some(w) = self.window {
            cfg.stationary_window = w;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn print_run(out: &mut impl Write, r: &RunReport) -> std::io::Result<()> {
    let Some(rep) = &r.report else {
        return writeln!(out, "{}: error: {}", r.config_id, r.error.as_deref().unwrap_or(""));
    };
    writeln!(
        out,
        "{} {} final_error={} amplitude={} crossings={} bound={}",
        r.config_id,
        rep.classification.as_str(),
        g12(rep.final_error),
        g12_opt(rep.oscillation_amplitude),
        rep.crossing_count,
        g12_opt(rep.theoretical_bound),
    )
}

/// Executes a parsed command, writing human-readable output to `out`.
pub fn execute(cli: Cli, out: &mut impl Write) -> Result<()> {
    let stdout_err = |e: std::io::Error| BenchError::Io {
        path: PathBuf::from("<stdout>"),
        msg: e.to_string(),
    };
    match cli.command {
        Command::Bench { id, out: dir } => {
            let specs = if id == "all" {
                registry()
            } else {
                vec![lookup(&id).ok_or(BenchError::UnknownExperiment(id))?]
            };
            for spec in &specs {
                let summary = run_experiment(spec, &dir)?;
                writeln!(out, "[{}]", summary.experiment).map_err(stdout_err)?;
                for r in &summary.runs {
                    print_run(out, r).map_err(stdout_err)?;
                }
                if let Some(order) = &summary.order {
                    match order.alpha_star {
                        Some(a) => writeln!(out, "order alpha*={}", g12(a)),
                        None => writeln!(out, "order error: {}", order.error.as_deref().unwrap_or("")),
                    }
                    .map_err(stdout_err)?;
                }
            }
        }
        Command::Run(args) => {
            let cfg = args.to_config()?;
            let obj = parse_objective::<f64>(&args.objective)?;
            let (trace, conv) = evaluate(&obj, &cfg)?;
            fs::create_dir_all(&args.out).map_err(|e| BenchError::io(&args.out, e))?;
            let path = args.out.join("trace.csv");
            let file = fs::File::create(&path).map_err(|e| BenchError::io(&path, e))?;
            write_trace_csv(&trace, std::io::BufWriter::new(file))?;
            let report = RunReport {
                config_id: "run".into(),
                objective: args.objective.clone(),
                config: cfg,
                termination: Some(trace.termination),
                iterations: trace.len(),
                report: Some(conv),
                note: None,
                error: None,
            };
            let path = args.out.join("report.json");
            let json = serde_json::to_string_pretty(&report).map_err(|e| BenchError::Json(e.to_string()))?;
            fs::write(&path, json + "\n").map_err(|e| BenchError::io(&path, e))?;
            writeln!(out, "termination={} iterations={}", trace.termination.as_str(), trace.len())
                .map_err(stdout_err)?;
            print_run(out, &report).map_err(stdout_err)?;
        }
        Command::Bound { rho, mu, alpha, p } => {
            writeln!(out, "{}", g12(theoretical_bound(rho, mu, alpha, p)?)).map_err(stdout_err)?;
        }
        Command::Delta { rho, mu, alpha } => {
            writeln!(out, "{}", g12(recommend_delta(rho, mu, alpha)?)).map_err(stdout_err)?;
        }
        Command::EstimateOrder { objective, rho, lo, hi, tol, t1, t2, max_iter } => {
            let obj = parse_objective::<f64>(&objective)?;
            let mut tmpl = OptimizerConfig::fogm(0.5, rho, t1).with_t2(t2);
            if let Some(n) = max_iter {
                tmpl = tmpl.with_max_iter(n);
            }
            tmpl.validate()?;
            let est = estimate_convexity_order(&obj, &tmpl, lo, hi, tol)?;
            writeln!(out, "{}", g12(est.alpha_star)).map_err(stdout_err)?;
        }
    }
    Ok(())
}
