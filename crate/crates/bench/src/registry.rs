use fogm::analysis::recommend_delta;
use fogm::OptimizerConfig;
use serde::{Deserialize, Serialize};

/// One named run inside an experiment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigEntry {
    pub id: String,
    /// Overrides the experiment's objective for this run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective_id: Option<String>,
    pub config: OptimizerConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Bisection search for the critical FOGM order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderSearch {
    pub template: OptimizerConfig,
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outputs {
    pub trace_csv: bool,
    pub report_json: bool,
    pub summary_table: bool,
}

impl Default for Outputs {
    fn default() -> Self {
        Self {
            trace_csv: true,
            report_json: true,
            summary_table: true,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub id: String,
    pub objective_id: String,
    pub configs: Vec<ConfigEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_search: Option<OrderSearch>,
    #[serde(default)]
    pub outputs: Outputs,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ExperimentSpec {
    pub fn new(id: impl Into<String>, objective_id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            objective_id: objective_id.into(),
            configs: Vec::new(),
            order_search: None,
            outputs: Outputs::default(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, id: String, config: OptimizerConfig) -> &mut ConfigEntry {
        self.configs.push(ConfigEntry {
            id,
            objective_id: None,
            config,
            note: None,
        });
        self.configs.last_mut().expect("just pushed")
    }

    pub fn alphas(&self) -> Vec<f64> {
        self.configs.iter().map(|c| c.config.alpha).collect()
    }

    pub fn deltas(&self) -> Vec<f64> {
        self.configs.iter().map(|c| c.config.delta).collect()
    }
}

const MU: f64 = 2.0;

fn ex1() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex1", "quadratic:c=3");
    for alpha in [1.0, 1.2, 1.4, 1.6, 1.8] {
        let e = spec.push(
            format!("fogm_a{alpha}"),
            OptimizerConfig::fogm(alpha, 0.01, -1.0).with_t2(0.0),
        );
        if alpha == 1.0 {
            e.note = Some(
                "alpha=1 follows the analytic GM recursion t_{k+1}-3 = 0.98 (t_k-3); \
                 the reference value 7.23e-5 at step 1060 is inconsistent with it"
                    .into(),
            );
        }
    }
    spec.notes.push(
        "row fogm_a1 is the analytic GM recursion, substituted for an inconsistent reference value"
            .into(),
    );
    spec
}

fn ex2() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex2", "quadratic:c=3");
    for rho in [0.01, 0.1, 1.0, 10.0] {
        spec.push(
            format!("fogm_rho{rho}"),
            OptimizerConfig::fogm(1.5, rho, -1.0).with_t2(0.0),
        );
    }
    spec.push("gm_rho10".into(), OptimizerConfig::gm(10.0, -1.0).with_t2(0.0));
    spec
}

fn ex3() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex3", "quadratic:c=3");
    for delta in [0.0, 0.004, 0.04, 0.4] {
        spec.push(
            format!("modified_d{delta}"),
            OptimizerConfig::modified(1.5, 0.1, delta, -1.0).with_t2(0.0),
        );
    }
    spec
}

fn ex4() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex4", "quadratic:c=3");
    let rho = 0.01;
    let delta = recommend_delta(rho, MU, 1.3).expect("valid orders");
    for c in [3.0, 100.0] {
        let objective = format!("quadratic:c={c}");
        let runs = [
            ("gm", OptimizerConfig::gm(rho, 0.0)),
            ("fogm_a0.7", OptimizerConfig::fogm(0.7, rho, 0.0)),
            ("modified_a1.3", OptimizerConfig::modified(1.3, rho, delta, 0.0)),
            ("switching", OptimizerConfig::switching(0.7, 1.3, rho, 0.0)),
        ];
        for (name, cfg) in runs {
            let e = spec.push(format!("{name}_c{c}"), cfg.with_t2(1.0));
            e.objective_id = Some(objective.clone());
        }
    }
    spec.notes
        .push("extrema c in {3, 100} are representative choices".into());
    spec
}

fn ex5() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex5", "quadratic:c=100");
    for rho in [0.01, 0.1, 1.0, 10.0, 100.0] {
        spec.push(
            format!("switching_rho{rho}"),
            OptimizerConfig::switching(0.7, 1.3, rho, 0.0).with_t2(1.0),
        );
        spec.push(format!("gm_rho{rho}"), OptimizerConfig::gm(rho, 0.0).with_t2(1.0));
    }
    spec
}

fn ex6() -> ExperimentSpec {
    let mut spec = ExperimentSpec::new("ex6", "pow43:c=100");
    for alpha in [0.332, 0.334, 0.5, 0.8, 1.0, 1.2] {
        spec.push(
            format!("fogm_a{alpha}"),
            OptimizerConfig::fogm(alpha, 2.0, -1.0).with_t2(0.0),
        );
    }
    spec.order_search = Some(OrderSearch {
        template: OptimizerConfig::fogm(0.5, 2.0, -1.0).with_t2(0.0),
        lo: 0.1,
        hi: 0.9,
        tol: 0.005,
    });
    spec
}

/// Built-in experiments `ex1` through `ex6`.
pub fn registry() -> Vec<ExperimentSpec> {
    vec![ex1(), ex2(), ex3(), ex4(), ex5(), ex6()]
}

pub fn lookup(id: &str) -> Option<ExperimentSpec> {
    registry().into_iter().find(|s| s.id == id)
}
