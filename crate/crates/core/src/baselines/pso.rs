//! Global-best particle swarm with a linearly decreasing inertia weight.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{init_population, Individual, Observer, RngStream, RunContext, RunOptions, RunResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PsoParams {
    pub c1: f64,
    pub c2: f64,
    pub inertia_start: f64,
    pub inertia_end: f64,
    /// Velocity limit as a fraction of each dimension's width.
    pub vmax_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        PsoParams {
            c1: 2.0,
            c2: 2.0,
            inertia_start: 0.9,
            inertia_end: 0.4,
            vmax_fraction: 0.2,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.c1 >= 0.0 && self.c2 >= 0.0) {
            return Err(Error::config(format!(
                "acceleration coefficients must be non-negative, got c1={} c2={}",
                self.c1, self.c2
            )));
        }
        if !(self.inertia_start.is_finite() && self.inertia_end.is_finite()) {
            return Err(Error::config("inertia schedule must be finite"));
        }
        if !(self.vmax_fraction > 0.0 && self.vmax_fraction.is_finite()) {
            return Err(Error::config(format!(
                "vmax_fraction must be positive, got {}",
                self.vmax_fraction
            )));
        }
        Ok(())
    }

    /// Inertia weight after `fes` of `max_fes` evaluations.
    pub fn inertia(&self, fes: u64, max_fes: u64) -> f64 {
        let t = (fes.min(max_fes) as f64) / max_fes as f64;
        self.inertia_start + (self.inertia_end - self.inertia_start) * t
    }
}

pub fn pso_optimize(problem: &Problem, n: usize, max_fes: u64, params: &PsoParams, seed: u64) -> Result<RunResult> {
    pso_optimize_with(problem, n, max_fes, params, seed, RunOptions::default(), None)
}

pub fn pso_optimize_with(
    problem: &Problem,
    n: usize,
    max_fes: u64,
    params: &PsoParams,
    seed: u64,
    options: RunOptions,
    observer: Option<&mut dyn Observer>,
) -> Result<RunResult> {
    params.validate()?;
    let space = problem.space();
    let d = space.dim();
    let mut rng = RngStream::new(seed);
    let mut pop = init_population(space, n, &mut rng)?;
    let mut ctx = RunContext::new(problem, max_fes, options, observer)?;
    let vmax: Vec<f64> = (0..d).map(|j| params.vmax_fraction * space.width(j)).collect();
    let mut vel = vec![vec![0.0; d]; n];

    let init_done = ctx.evaluate_all(&mut pop).is_ok();
    // Personal bests live in `pop.members`; `pos` holds current positions.
    let mut pos: Vec<Vec<f64>> = pop.members.iter().map(|m| m.x.clone()).collect();
    ctx.checkpoint(0, &pop);
    if !init_done {
        return Ok(ctx.finish(&pop));
    }

    let mut iteration = 0;
    'outer: while !ctx.is_exhausted() {
        iteration += 1;
        let w = params.inertia(ctx.budget().fes(), max_fes);
        for i in 0..n {
            let gbest = &pop.best().x;
            let pbest = &pop.members[i].x;
            for j in 0..d {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                let v = w * vel[i][j]
                    + params.c1 * r1 * (pbest[j] - pos[i][j])
                    + params.c2 * r2 * (gbest[j] - pos[i][j]);
                vel[i][j] = v.clamp(-vmax[j], vmax[j]);
                pos[i][j] += vel[i][j];
            }
            space.clamp_in_place(&mut pos[i]);
            let mut cand = Individual::unevaluated(pos[i].clone());
            let Ok(f) = ctx.evaluate(&mut cand, &mut pop) else {
                ctx.checkpoint(iteration, &pop);
                break 'outer;
            };
            if f < pop.members[i].f() {
                pop.members[i] = cand;
            }
        }
        ctx.checkpoint(iteration, &pop);
    }
    Ok(ctx.finish(&pop))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inertia_schedule_endpoints() {
        let p = PsoParams::default();
        assert_eq!(p.inertia(0, 100), 0.9);
        assert!((p.inertia(100, 100) - 0.4).abs() < 1e-15);
        assert!((p.inertia(50, 100) - 0.65).abs() < 1e-15);
    }

    #[test]
    fn negative_coefficients_rejected() {
        let p = PsoParams { c1: -1.0, ..Default::default() };
        assert!(p.validate().is_err());
    }
}
