//! Diffusion moves: fusion/jump, Lévy reinfection and DE recombination.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::search::{Population, RngStream, SearchSpace};
use crate::vdo::burst::BurstContext;

/// Outcome of the fusion/jump coin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FusionMove {
    /// Replace dimension `dim` with the best's coordinate plus a small
    /// gradient-scaled perturbation.
    Jump { dim: usize, xi: f64 },
    /// `x <- (1 - alpha) x + alpha best` with `alpha` in {0, 1}.
    Fuse { alpha: f64 },
}

pub fn fusion_jump_with(
    x: &[f64],
    best_x: &[f64],
    ctx: &BurstContext,
    mv: FusionMove,
    space: &SearchSpace,
) -> Vec<f64> {
    let mut out = x.to_vec();
    match mv {
        FusionMove::Jump { dim, xi } => {
            out[dim] = best_x[dim] + 0.1 * (xi - 0.5) * ctx.beta_t * ctx.delta_g[dim];
        }
        FusionMove::Fuse { alpha } => {
            for (o, b) in out.iter_mut().zip(best_x) {
                *o = (1.0 - alpha) * *o + alpha * b;
            }
        }
    }
    space.clamp_in_place(&mut out);
    out
}

pub fn fusion_jump(
    x: &[f64],
    best_x: &[f64],
    ctx: &BurstContext,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let mv = if rng.bernoulli(0.5) {
        FusionMove::Jump {
            dim: rng.index(x.len()),
            xi: rng.uniform(),
        }
    } else {
        FusionMove::Fuse {
            alpha: if rng.bernoulli(0.5) { 1.0 } else { 0.0 },
        }
    };
    fusion_jump_with(x, best_x, ctx, mv, space)
}

/// Mantegna sampler for symmetric Lévy-stable steps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MantegnaLevy {
    beta: f64,
    sigma_u: f64,
}

impl MantegnaLevy {
    /// Fails unless `0 < beta < 2`; at `beta = 2` the scale collapses to zero.
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta < 2.0) {
            return Err(Error::config(format!(
                "levy_beta must lie in (0, 2), got {beta}"
            )));
        }
        Ok(MantegnaLevy {
            beta,
            sigma_u: mantegna_sigma(beta),
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        let u = rng.normal() * self.sigma_u;
        let v = rng.normal();
        u / v.abs().powf(1.0 / self.beta)
    }

    pub fn vector(&self, dim: usize, rng: &mut RngStream) -> Vec<f64> {
        (0..dim).map(|_| self.sample(rng)).collect()
    }
}

fn mantegna_sigma(beta: f64) -> f64 {
    let num = libm::tgamma(1.0 + beta) * (PI * beta / 2.0).sin();
    let den = libm::tgamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

pub fn levy_vector(dim: usize, beta: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    Ok(MantegnaLevy::new(beta)?.vector(dim, rng))
}

/// `x + l ⊙ (best - x)`, projected onto the box.
pub fn levy_reinfection_with(x: &[f64], best_x: &[f64], l: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out: Vec<f64> = x
        .iter()
        .zip(best_x.iter().zip(l))
        .map(|(v, (b, s))| v + s * (b - v))
        .collect();
    space.clamp_in_place(&mut out);
    out
}

pub fn levy_reinfection(
    x: &[f64],
    best_x: &[f64],
    levy: &MantegnaLevy,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let l = levy.vector(x.len(), rng);
    levy_reinfection_with(x, best_x, &l, space)
}

/// Binomial crossover of `target` with `a + f (b - c)`; dimension `j_rand`
/// always comes from the mutant.
#[allow(clippy::too_many_arguments)]
pub fn de_trial_with(
    target: &[f64],
    a: &[f64],
    b: &[f64],
    c: &[f64],
    f: f64,
    cross: &[bool],
    j_rand: usize,
    space: &SearchSpace,
) -> Vec<f64> {
    let mut out: Vec<f64> = (0..target.len())
        .map(|j| {
            if cross[j] || j == j_rand {
                a[j] + f * (b[j] - c[j])
            } else {
                target[j]
            }
        })
        .collect();
    space.clamp_in_place(&mut out);
    out
}

/// DE rand/1/bin trial for member `i`, crossed with `target`.
///
/// Returns `None` when the population has fewer than four members.
pub fn de_recombination(
    pop: &Population,
    i: usize,
    target: &[f64],
    f: f64,
    cr: f64,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Option<Vec<f64>> {
    let n = pop.len();
    if n < 4 {
        return None;
    }
    let picks = rng.distinct_excluding(n, 3, i);
    let d = target.len();
    let j_rand = rng.index(d);
    let cross: Vec<bool> = (0..d).map(|_| rng.bernoulli(cr)).collect();
    let x = |k: usize| pop.members[picks[k]].x.as_slice();
    Some(de_trial_with(target, x(0), x(1), x(2), f, &cross, j_rand, space))
}
