//! Repeated seeded runs over problems × optimizers, with statistics, ranks
//! and file output.

pub mod config;
pub mod emit;
pub mod rank;
pub mod stats;

use rayon::prelude::*;

use crate::error::Result;
use crate::search::RunResult;

pub use config::{ExperimentConfig, OptimizerSpec, RandomParams, OPTIMIZER_NAMES};
pub use emit::{emit_outputs, read_curve, read_summary, SummaryRow};
pub use rank::{rank, RankTable};
pub use stats::SummaryStats;

#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub problem: String,
    pub optimizer: String,
    pub run_index: usize,
    pub seed: u64,
    pub result: RunResult,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    /// Sorted by problem, then optimizer (configuration order), then run.
    pub records: Vec<RunRecord>,
    /// One row per (problem, optimizer), in the same order.
    pub summary: Vec<SummaryRow>,
    pub ranks: RankTable,
}

/// Runs every (problem, optimizer, run) combination in parallel and
/// aggregates the results without touching the filesystem.
pub fn execute(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let problems = cfg.resolve_problems()?;
    let jobs: Vec<(usize, usize, usize)> = (0..problems.len())
        .flat_map(|p| (0..cfg.optimizers.len()).flat_map(move |o| (0..cfg.runs).map(move |r| (p, o, r))))
        .collect();

    let records = jobs
        .into_par_iter()
        .map(|(p, o, r)| {
            let seed = cfg.seed(r);
            let result = cfg.optimizers[o].run(&problems[p], cfg.population, cfg.max_fes, seed)?;
            Ok(RunRecord {
                problem: cfg.problems[p].clone(),
                optimizer: cfg.optimizers[o].name().to_string(),
                run_index: r,
                seed,
                result,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(summarize(cfg, records))
}

fn summarize(cfg: &ExperimentConfig, records: Vec<RunRecord>) -> ExperimentReport {
    let n_opt = cfg.optimizers.len();
    let stats: Vec<Vec<SummaryStats>> = records
        .chunks(cfg.runs)
        .map(|cell| SummaryStats::from_values(&cell.iter().map(|r| r.result.best_f).collect::<Vec<_>>()))
        .collect::<Vec<_>>()
        .chunks(n_opt)
        .map(|row| row.to_vec())
        .collect();

    let means: Vec<Vec<f64>> = stats.iter().map(|row| row.iter().map(|s| s.mean).collect()).collect();
    let variances: Vec<Vec<f64>> = stats.iter().map(|row| row.iter().map(|s| s.variance).collect()).collect();
    let names: Vec<String> = cfg.optimizers.iter().map(|o| o.name().to_string()).collect();
    let ranks = RankTable::new(names.clone(), cfg.problems.clone(), &means, &variances);

    let mut summary = Vec::with_capacity(stats.len() * n_opt);
    for (p, row) in stats.iter().enumerate() {
        for (o, s) in row.iter().enumerate() {
            summary.push(SummaryRow {
                problem: cfg.problems[p].clone(),
                optimizer: names[o].clone(),
                mean: s.mean,
                variance: s.variance,
                best: s.best,
                worst: s.worst,
                rank_m: ranks.rank_m[p][o],
                rank_v: ranks.rank_v[p][o],
                std: s.std(),
            });
        }
    }
    ExperimentReport {
        records,
        summary,
        ranks,
    }
}

/// Runs the experiment and writes its outputs under `cfg.output`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let report = execute(cfg)?;
    emit_outputs(&report, cfg, &cfg.output)?;
    Ok(report)
}

/// Recomputes ranks for rows read back from a `summary.csv`, grouping by
/// problem in first-appearance order.
pub fn rerank(rows: &[SummaryRow]) -> (Vec<SummaryRow>, RankTable) {
    let mut problems: Vec<String> = Vec::new();
    let mut optimizers: Vec<String> = Vec::new();
    for r in rows {
        if !problems.contains(&r.problem) {
            problems.push(r.problem.clone());
        }
        if !optimizers.contains(&r.optimizer) {
            optimizers.push(r.optimizer.clone());
        }
    }
    let mut means = vec![vec![f64::INFINITY; optimizers.len()]; problems.len()];
    let mut variances = means.clone();
    for r in rows {
        let p = problems.iter().position(|x| *x == r.problem).unwrap();
        let o = optimizers.iter().position(|x| *x == r.optimizer).unwrap();
        means[p][o] = r.mean;
        variances[p][o] = r.variance;
    }
    let table = RankTable::new(optimizers.clone(), problems.clone(), &means, &variances);
    let out = rows
        .iter()
        .map(|r| {
            let p = problems.iter().position(|x| *x == r.problem).unwrap();
            let o = optimizers.iter().position(|x| *x == r.optimizer).unwrap();
            SummaryRow {
                rank_m: table.rank_m[p][o],
                rank_v: table.rank_v[p][o],
                ..r.clone()
            }
        })
        .collect();
    (out, table)
}
