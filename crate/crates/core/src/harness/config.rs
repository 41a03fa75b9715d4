//! Experiment configuration and the optimizer registry.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::baselines::{ga_optimize_with, pso_optimize_with, random_search_with, GaParams, PsoParams};
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{RunOptions, RunResult};
use crate::vdo::{optimize_with, VdoParams};

/// Registered optimizer names.
pub const OPTIMIZER_NAMES: [&str; 4] = ["vdo", "pso", "ga", "random"];

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RandomParams {
    /// Evaluations per curve point; the population size when absent.
    pub batch: Option<usize>,
}

/// An optimizer together with its (possibly defaulted) parameters.
///
/// In JSON the optimizer is selected by `"name"` and parameters sit beside
/// it: `{"name": "vdo", "p_bud": 0.4}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum OptimizerSpec {
    Vdo(VdoParams),
    Pso(PsoParams),
    Ga(GaParams),
    Random(RandomParams),
}

impl OptimizerSpec {
    /// Optimizer `name` with default parameters.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "vdo" => Ok(OptimizerSpec::Vdo(VdoParams::default())),
            "pso" => Ok(OptimizerSpec::Pso(PsoParams::default())),
            "ga" => Ok(OptimizerSpec::Ga(GaParams::default())),
            "random" => Ok(OptimizerSpec::Random(RandomParams::default())),
            _ => Err(Error::UnknownOptimizer(name.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OptimizerSpec::Vdo(_) => "vdo",
            OptimizerSpec::Pso(_) => "pso",
            OptimizerSpec::Ga(_) => "ga",
            OptimizerSpec::Random(_) => "random",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            OptimizerSpec::Vdo(p) => p.validate(),
            OptimizerSpec::Pso(p) => p.validate(),
            OptimizerSpec::Ga(p) => p.validate(),
            OptimizerSpec::Random(RandomParams { batch: Some(0) }) => {
                Err(Error::config("random search batch must be at least 1"))
            }
            OptimizerSpec::Random(_) => Ok(()),
        }
    }

    pub fn run(&self, problem: &Problem, n: usize, max_fes: u64, seed: u64) -> Result<RunResult> {
        let opts = RunOptions::default();
        match self {
            OptimizerSpec::Vdo(p) => optimize_with(problem, n, max_fes, p, seed, opts, None),
            OptimizerSpec::Pso(p) => pso_optimize_with(problem, n, max_fes, p, seed, opts, None),
            OptimizerSpec::Ga(p) => ga_optimize_with(problem, n, max_fes, p, seed, opts, None),
            OptimizerSpec::Random(p) => random_search_with(problem, max_fes, p.batch.unwrap_or(n), seed, opts, None),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<String>,
    pub optimizers: Vec<OptimizerSpec>,
    pub runs: usize,
    pub population: usize,
    pub max_fes: u64,
    /// Run `r` uses seed `base_seed + r`.
    pub base_seed: u64,
    pub output: PathBuf,
    /// Directory holding shift/rotation data for benchmark-suite problems.
    pub cec_data: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            problems: Vec::new(),
            optimizers: Vec::new(),
            runs: 10,
            population: 50,
            max_fes: 20_000,
            base_seed: 0,
            output: PathBuf::from("results"),
            cec_data: PathBuf::from("input_data"),
        }
    }
}

impl ExperimentConfig {
    /// Parses a JSON configuration; `origin` labels errors.
    pub fn from_json(text: &str, origin: &Path) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Serde {
            path: origin.to_path_buf(),
            message: e.to_string(),
        })?;
        // Check optimizer names first so a typo reads as an unknown optimizer
        // rather than a generic schema error.
        if let Some(list) = value.get("optimizers").and_then(|v| v.as_array()) {
            for entry in list {
                match entry.get("name").and_then(|n| n.as_str()) {
                    Some(name) if OPTIMIZER_NAMES.contains(&name) => {}
                    Some(name) => return Err(Error::UnknownOptimizer(name.to_string())),
                    None => return Err(Error::config("every optimizer entry needs a \"name\"")),
                }
            }
        }
        serde_json::from_value(value).map_err(|e| Error::config(format!("{}: {e}", origin.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text, path)
    }

    /// Seed of run `run_index`.
    pub fn seed(&self, run_index: usize) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    /// Checks the numeric settings and optimizer parameters.
    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::config("runs must be at least 1"));
        }
        if self.population < 2 {
            return Err(Error::config("population must be at least 2"));
        }
        if self.max_fes < self.population as u64 {
            return Err(Error::config(format!(
                "max_fes ({}) must cover the initial population ({})",
                self.max_fes, self.population
            )));
        }
        if self.problems.is_empty() {
            return Err(Error::config("no problems given"));
        }
        if self.optimizers.is_empty() {
            return Err(Error::config("no optimizers given"));
        }
        for (k, o) in self.optimizers.iter().enumerate() {
            o.validate()?;
            if self.optimizers[..k].iter().any(|p| p.name() == o.name()) {
                return Err(Error::config(format!("optimizer `{}` listed twice", o.name())));
            }
        }
        Ok(())
    }

    /// Validates and resolves every problem name.
    pub fn resolve_problems(&self) -> Result<Vec<Problem>> {
        self.validate()?;
        self.problems
            .iter()
            .map(|name| crate::problems::by_name(name, &self.cec_data))
            .collect()
    }
}
