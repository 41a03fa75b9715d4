//! Burst replication: mean gradient, time-decaying burst factor and the
//! early/late step sizes.

use std::f64::consts::PI;

use crate::search::{Population, RngStream, SearchSpace};
use crate::vdo::VdoParams;

/// Mean of `best_x - x_i` over the survivor set.
///
/// Panics on an empty survivor set.
pub fn mean_gradient(pop: &Population, survivors: &[usize], best_x: &[f64]) -> Vec<f64> {
    assert!(!survivors.is_empty(), "mean gradient needs at least one survivor");
    let m = survivors.len() as f64;
    let mut g = vec![0.0; best_x.len()];
    for &i in survivors {
        for (gj, (b, x)) in g.iter_mut().zip(best_x.iter().zip(&pop.members[i].x)) {
            *gj += b - x;
        }
    }
    g.iter_mut().for_each(|v| *v /= m);
    g
}

/// `(1 - fes/max_fes)^(2 fes/max_fes)`, with `0^0 = 1`.
pub fn burst_factor(fes: u64, max_fes: u64) -> f64 {
    assert!(max_fes > 0, "max_fes must be positive");
    let t = (fes.min(max_fes) as f64) / max_fes as f64;
    if t == 0.0 {
        return 1.0;
    }
    (1.0 - t).powf(2.0 * t)
}

pub fn replication_strength(w0: f64, beta_t: f64) -> f64 {
    w0 * beta_t
}

/// Exploratory step `rho (xi - 0.5) beta_t sin(2 pi xi')`.
pub fn step_early_with(rho: f64, beta_t: f64, xi: f64, xi_prime: f64) -> f64 {
    rho * (xi - 0.5) * beta_t * (2.0 * PI * xi_prime).sin()
}

/// Exploitative step
/// `0.1 rho (xi - 0.5) beta_t [1 + (1 + tanh(r0 / sqrt(1 - r0^2))) beta_t / 2]`.
pub fn step_late_with(rho: f64, beta_t: f64, r0: f64, xi: f64) -> f64 {
    assert!(r0 > 0.0 && r0 < 1.0, "r0 must lie strictly inside (0, 1), got {r0}");
    let growth = (r0 / (1.0 - r0 * r0).sqrt()).tanh();
    0.1 * rho * (xi - 0.5) * beta_t * (1.0 + 0.5 * (1.0 + growth) * beta_t)
}

pub fn step_early(rho: f64, beta_t: f64, rng: &mut RngStream) -> f64 {
    let xi = rng.uniform();
    let xi_prime = rng.uniform();
    step_early_with(rho, beta_t, xi, xi_prime)
}

pub fn step_late(rho: f64, beta_t: f64, r0: f64, rng: &mut RngStream) -> f64 {
    step_late_with(rho, beta_t, r0, rng.uniform())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepMode {
    Early,
    Late,
}

impl StepMode {
    pub fn pick(rng: &mut RngStream) -> Self {
        if rng.bernoulli(0.5) {
            StepMode::Early
        } else {
            StepMode::Late
        }
    }
}

/// Per-iteration quantities shared by every individual's update.
#[derive(Clone, Debug, PartialEq)]
pub struct BurstContext {
    pub delta_g: Vec<f64>,
    pub beta_t: f64,
    pub rho: f64,
    /// Survivor ratio `M / N`, clamped into `[r0_eps, 1 - r0_eps]`.
    pub r0: f64,
}

impl BurstContext {
    pub fn new(
        pop: &Population,
        survivors: &[usize],
        best_x: &[f64],
        fes: u64,
        max_fes: u64,
        params: &VdoParams,
    ) -> Self {
        let beta_t = burst_factor(fes, max_fes);
        let ratio = survivors.len() as f64 / pop.len() as f64;
        BurstContext {
            delta_g: mean_gradient(pop, survivors, best_x),
            beta_t,
            rho: replication_strength(params.w0, beta_t),
            r0: ratio.clamp(params.r0_eps, 1.0 - params.r0_eps),
        }
    }

    pub fn step(&self, mode: StepMode, rng: &mut RngStream) -> f64 {
        match mode {
            StepMode::Early => step_early(self.rho, self.beta_t, rng),
            StepMode::Late => step_late(self.rho, self.beta_t, self.r0, rng),
        }
    }
}

/// `x_j + s * gate_j * sign_j * delta_g_j` with `sign_j = -1` when flipped.
pub fn burst_update_with(
    x: &[f64],
    delta_g: &[f64],
    step: f64,
    gates: &[bool],
    flips: &[bool],
    space: &SearchSpace,
) -> Vec<f64> {
    let mut out: Vec<f64> = x
        .iter()
        .enumerate()
        .map(|(j, v)| {
            if !gates[j] {
                return *v;
            }
            let sign = if flips[j] { -1.0 } else { 1.0 };
            v + step * sign * delta_g[j]
        })
        .collect();
    space.clamp_in_place(&mut out);
    out
}

/// Gated, envelope-flipped step along the mean gradient.
pub fn burst_update(
    x: &[f64],
    ctx: &BurstContext,
    params: &VdoParams,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let mode = StepMode::pick(rng);
    let step = ctx.step(mode, rng);
    let d = x.len();
    let mut gates = Vec::with_capacity(d);
    let mut flips = Vec::with_capacity(d);
    for _ in 0..d {
        gates.push(rng.bernoulli(params.act_prob));
        flips.push(rng.bernoulli(params.flip_prob));
    }
    burst_update_with(x, &ctx.delta_g, step, &gates, &flips, space)
}

/// `x + steps ⊙ delta_g`, projected onto the box.
pub fn budding_update_with(x: &[f64], delta_g: &[f64], steps: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out: Vec<f64> = x
        .iter()
        .zip(delta_g.iter().zip(steps))
        .map(|(v, (g, s))| v + s * g)
        .collect();
    space.clamp_in_place(&mut out);
    out
}

/// Local move along the mean gradient with one fresh step draw per
/// dimension, all of the same randomly chosen mode.
pub fn budding_update(x: &[f64], ctx: &BurstContext, space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    let mode = StepMode::pick(rng);
    let steps: Vec<f64> = (0..x.len()).map(|_| ctx.step(mode, rng)).collect();
    budding_update_with(x, &ctx.delta_g, &steps, space)
}
