//! The virus diffusion optimizer.
//!
//! Each iteration filters the population on random receptor dimensions,
//! nudges the survivors toward the best, then moves every individual with a
//! burst step along the survivors' mean gradient followed by either a
//! fusion/jump or a budding move, with occasional Lévy and DE perturbations.
//! A rolling archive of recent states periodically restores each individual
//! to the best state it visited.

pub mod burst;
pub mod diffusion;
pub mod latency;
pub mod tropism;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{init_population, Individual, Observer, RngStream, RunContext, RunOptions, RunResult};

pub use burst::{
    budding_update, burst_factor, burst_update, mean_gradient, replication_strength, step_early, step_late,
    BurstContext, StepMode,
};
pub use diffusion::{de_recombination, fusion_jump, levy_reinfection, levy_vector, FusionMove, MantegnaLevy};
pub use latency::LatencyArchive;
pub use tropism::{receptor_count, tropism_filter, tropism_step, TropismOutcome};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VdoParams {
    /// Receptor count is `floor(dim / divide_num)`, at least 1.
    pub divide_num: usize,
    pub tropism_min: f64,
    pub tropism_max: f64,
    /// Initial replication strength.
    pub w0: f64,
    /// Per-dimension activation probability of the burst step.
    pub act_prob: f64,
    /// Per-dimension sign-flip probability of the burst step.
    pub flip_prob: f64,
    /// Probability of fusion/jump instead of budding.
    pub p_bud: f64,
    pub p_levy: f64,
    /// Stability index of the Lévy steps, in (0, 2).
    pub levy_beta: f64,
    pub p_de: f64,
    pub de_f: f64,
    pub de_cr: f64,
    /// Number of iterations remembered before reactivation.
    pub latency_depth: usize,
    /// Scale of the receptor-guided step.
    pub eta: f64,
    /// Keeps the survivor ratio away from 0 and 1.
    pub r0_eps: f64,
}

impl Default for VdoParams {
    fn default() -> Self {
        VdoParams {
            divide_num: 4,
            tropism_min: 0.1,
            tropism_max: 0.5,
            w0: 1.0,
            act_prob: 0.5,
            flip_prob: 0.2,
            p_bud: 0.3,
            p_levy: 0.1,
            levy_beta: 1.5,
            p_de: 0.2,
            de_f: 0.5,
            de_cr: 0.9,
            latency_depth: 10,
            eta: 1.0,
            r0_eps: 1e-3,
        }
    }
}

impl VdoParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::config(msg));
        if self.divide_num == 0 {
            return bad("divide_num must be at least 1".into());
        }
        if !(0.0 <= self.tropism_min && self.tropism_min <= self.tropism_max && self.tropism_max.is_finite()) {
            return bad(format!(
                "tropism range must satisfy 0 <= min <= max, got [{}, {}]",
                self.tropism_min, self.tropism_max
            ));
        }
        for (name, p) in [
            ("act_prob", self.act_prob),
            ("flip_prob", self.flip_prob),
            ("p_bud", self.p_bud),
            ("p_levy", self.p_levy),
            ("p_de", self.p_de),
            ("de_cr", self.de_cr),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        if !(self.w0 > 0.0 && self.w0.is_finite()) {
            return bad(format!("w0 must be positive, got {}", self.w0));
        }
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return bad(format!("eta must be positive, got {}", self.eta));
        }
        if !self.de_f.is_finite() {
            return bad(format!("de_f must be finite, got {}", self.de_f));
        }
        if self.latency_depth == 0 {
            return bad("latency_depth must be at least 1".into());
        }
        if !(self.r0_eps > 0.0 && self.r0_eps < 0.5) {
            return bad(format!("r0_eps must lie in (0, 0.5), got {}", self.r0_eps));
        }
        MantegnaLevy::new(self.levy_beta)?;
        Ok(())
    }
}

/// Minimizes `problem` with `n` individuals and `max_fes` evaluations.
pub fn optimize(problem: &Problem, n: usize, max_fes: u64, params: &VdoParams, seed: u64) -> Result<RunResult> {
    optimize_with(problem, n, max_fes, params, seed, RunOptions::default(), None)
}

pub fn optimize_with(
    problem: &Problem,
    n: usize,
    max_fes: u64,
    params: &VdoParams,
    seed: u64,
    options: RunOptions,
    observer: Option<&mut dyn Observer>,
) -> Result<RunResult> {
    params.validate()?;
    if max_fes < n as u64 {
        return Err(Error::config(format!(
            "max_fes ({max_fes}) must cover the initial population ({n})"
        )));
    }
    let space = problem.space();
    let levy = MantegnaLevy::new(params.levy_beta)?;
    let mut rng = RngStream::new(seed);
    let mut pop = init_population(space, n, &mut rng)?;
    let mut ctx = RunContext::new(problem, max_fes, options, observer)?;
    let mut archive = LatencyArchive::new(n, space.dim(), params.latency_depth)?;

    // Cannot fail: the budget covers the population.
    let _ = ctx.evaluate_all(&mut pop);
    ctx.checkpoint(0, &pop);

    let mut iteration = 0;
    'outer: while !ctx.is_exhausted() {
        iteration += 1;
        let start_best = pop.best().x.clone();
        let filter = tropism_filter(&pop, &start_best, params.divide_num, &mut rng);
        let burst = BurstContext::new(
            &pop,
            &filter.survivors,
            &start_best,
            ctx.budget().fes(),
            max_fes,
            params,
        );
        let mut is_survivor = vec![false; n];
        for &i in &filter.survivors {
            is_survivor[i] = true;
        }

        for (i, &survivor) in is_survivor.iter().enumerate() {
            let best_x = pop.best().x.clone();
            let mut x = pop.members[i].x.clone();
            if survivor {
                x = tropism_step(&x, &best_x, params, space, &mut rng);
            }
            x = burst_update(&x, &burst, params, space, &mut rng);
            x = if rng.bernoulli(params.p_bud) {
                fusion_jump(&x, &best_x, &burst, space, &mut rng)
            } else {
                budding_update(&x, &burst, space, &mut rng)
            };
            if rng.bernoulli(params.p_levy) {
                x = levy_reinfection(&x, &best_x, &levy, space, &mut rng);
            }
            if rng.bernoulli(params.p_de) {
                if let Some(trial) = de_recombination(&pop, i, &x, params.de_f, params.de_cr, space, &mut rng) {
                    x = trial;
                }
            }

            let mut cand = Individual::unevaluated(x);
            let Ok(f) = ctx.evaluate(&mut cand, &mut pop) else {
                ctx.checkpoint(iteration, &pop);
                break 'outer;
            };
            archive.record(i, &cand.x, f);
            if f < pop.members[i].f() {
                pop.members[i] = cand;
            }
        }

        ctx.checkpoint(iteration, &pop);
        if archive.advance() {
            archive.reactivate(&mut pop)?;
        }
    }

    Ok(ctx.finish(&pop))
}
