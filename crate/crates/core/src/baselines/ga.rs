//! Real-coded generational GA: tournament selection, BLX-alpha crossover,
//! gaussian mutation and elitism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{
    init_population, Individual, Observer, Population, RngStream, RunContext, RunOptions, RunResult, SearchSpace,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GaParams {
    /// Crossover probability per offspring.
    pub pc: f64,
    /// Mutation probability per gene.
    pub pm: f64,
    pub tournament: usize,
    pub blend_alpha: f64,
    /// Mutation standard deviation as a fraction of each dimension's width.
    pub sigma_fraction: f64,
    pub elites: usize,
}

impl Default for GaParams {
    fn default() -> Self {
        GaParams {
            pc: 0.8,
            pm: 0.05,
            tournament: 3,
            blend_alpha: 0.5,
            sigma_fraction: 0.1,
            elites: 1,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        for (name, p) in [("pc", self.pc), ("pm", self.pm)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::config(format!("{name} must lie in [0, 1], got {p}")));
            }
        }
        if self.tournament == 0 {
            return Err(Error::config("tournament size must be at least 1"));
        }
        if !(self.blend_alpha >= 0.0 && self.sigma_fraction >= 0.0) {
            return Err(Error::config("blend_alpha and sigma_fraction must be non-negative"));
        }
        Ok(())
    }
}

fn tournament(pop: &Population, size: usize, rng: &mut RngStream) -> usize {
    let mut winner = rng.index(pop.len());
    for _ in 1..size {
        let c = rng.index(pop.len());
        if pop.members[c].f() < pop.members[winner].f() {
            winner = c;
        }
    }
    winner
}

fn blend(a: &[f64], b: &[f64], alpha: f64, rng: &mut RngStream) -> Vec<f64> {
    a.iter()
        .zip(b)
        .map(|(&u, &v)| {
            let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
            let ext = alpha * (hi - lo);
            rng.uniform_in(lo - ext, hi + ext)
        })
        .collect()
}

fn mutate(x: &mut [f64], params: &GaParams, space: &SearchSpace, rng: &mut RngStream) {
    for (j, v) in x.iter_mut().enumerate() {
        if rng.bernoulli(params.pm) {
            *v += rng.normal() * params.sigma_fraction * space.width(j);
        }
    }
}

pub fn ga_optimize(problem: &Problem, n: usize, max_fes: u64, params: &GaParams, seed: u64) -> Result<RunResult> {
    ga_optimize_with(problem, n, max_fes, params, seed, RunOptions::default(), None)
}

pub fn ga_optimize_with(
    problem: &Problem,
    n: usize,
    max_fes: u64,
    params: &GaParams,
    seed: u64,
    options: RunOptions,
    observer: Option<&mut dyn Observer>,
) -> Result<RunResult> {
    params.validate()?;
    if params.elites >= n {
        return Err(Error::config(format!(
            "elites ({}) must be fewer than the population ({n})",
            params.elites
        )));
    }
    let space = problem.space();
    let mut rng = RngStream::new(seed);
    let mut pop = init_population(space, n, &mut rng)?;
    let mut ctx = RunContext::new(problem, max_fes, options, observer)?;
    let init_done = ctx.evaluate_all(&mut pop).is_ok();
    ctx.checkpoint(0, &pop);
    if !init_done {
        return Ok(ctx.finish(&pop));
    }

    let mut iteration = 0;
    while !ctx.is_exhausted() {
        iteration += 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| pop.members[a].f().total_cmp(&pop.members[b].f()));
        let mut next: Vec<Individual> = order[..params.elites].iter().map(|&i| pop.members[i].clone()).collect();

        let mut exhausted = false;
        while next.len() < n {
            let pa = tournament(&pop, params.tournament, &mut rng);
            let mut child = if rng.bernoulli(params.pc) {
                let pb = tournament(&pop, params.tournament, &mut rng);
                blend(&pop.members[pa].x, &pop.members[pb].x, params.blend_alpha, &mut rng)
            } else {
                pop.members[pa].x.clone()
            };
            mutate(&mut child, params, space, &mut rng);
            space.clamp_in_place(&mut child);
            let mut ind = Individual::unevaluated(child);
            if ctx.evaluate(&mut ind, &mut pop).is_err() {
                exhausted = true;
                break;
            }
            next.push(ind);
        }
        if !exhausted {
            pop.members = next;
        }
        ctx.checkpoint(iteration, &pop);
        if exhausted {
            break;
        }
    }
    Ok(ctx.finish(&pop))
}
