//! Uniform i.i.d. sampling with best-so-far tracking.

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{Individual, Observer, Population, RngStream, RunContext, RunOptions, RunResult};

/// Evaluations per curve point when no batch size is given.
pub const DEFAULT_BATCH: usize = 50;

pub fn random_search(problem: &Problem, max_fes: u64, seed: u64) -> Result<RunResult> {
    random_search_with(problem, max_fes, DEFAULT_BATCH, seed, RunOptions::default(), None)
}

/// Samples `max_fes` points; one curve point per `batch` evaluations.
pub fn random_search_with(
    problem: &Problem,
    max_fes: u64,
    batch: usize,
    seed: u64,
    options: RunOptions,
    observer: Option<&mut dyn Observer>,
) -> Result<RunResult> {
    if batch == 0 {
        return Err(Error::config("batch size must be at least 1"));
    }
    let space = problem.space();
    let mut rng = RngStream::new(seed);
    let mut ctx = RunContext::new(problem, max_fes, options, observer)?;
    let mut pop = Population {
        members: Vec::new(),
        best: None,
    };
    let mut iteration = 0;
    while !ctx.is_exhausted() {
        for _ in 0..batch {
            let mut ind = Individual::unevaluated(space.sample(&mut rng));
            if ctx.evaluate(&mut ind, &mut pop).is_err() {
                break;
            }
        }
        ctx.checkpoint(iteration, &pop);
        iteration += 1;
    }
    Ok(ctx.finish(&pop))
}
