//! Receptor-dimension filtering and the receptor-guided step.

use crate::search::{Population, RngStream, SearchSpace};

/// One filtering pass on receptor dimension `receptor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterStage {
    pub receptor: usize,
    pub previous: usize,
    /// Members strictly above the best on this receptor.
    pub above: usize,
    /// Whether the complement within the previous set replaced the kept set.
    pub complemented: bool,
    pub kept: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropismOutcome {
    /// Sorted survivor indices; never empty.
    pub survivors: Vec<usize>,
    pub stages: Vec<FilterStage>,
    /// Set when the filter emptied and every index was restored.
    pub fallback: bool,
}

/// Number of receptor dimensions: `floor(dim / divide_num)`, at least 1.
pub fn receptor_count(dim: usize, divide_num: usize) -> usize {
    (dim / divide_num.max(1)).max(1)
}

/// Filters `positions` on the given receptor dimensions against `best_x`.
pub fn filter_on_receptors(positions: &[&[f64]], best_x: &[f64], receptors: &[usize]) -> TropismOutcome {
    let mut current: Vec<usize> = (0..positions.len()).collect();
    let mut stages = Vec::with_capacity(receptors.len());
    for &r in receptors {
        let previous = current.len();
        let (above, below): (Vec<usize>, Vec<usize>) =
            current.iter().partition(|&&i| positions[i][r] > best_x[r]);
        let n_above = above.len();
        let complemented = 2 * n_above < previous;
        current = if complemented { below } else { above };
        stages.push(FilterStage {
            receptor: r,
            previous,
            above: n_above,
            complemented,
            kept: current.len(),
        });
    }
    let fallback = current.is_empty();
    if fallback {
        current = (0..positions.len()).collect();
    }
    TropismOutcome {
        survivors: current,
        stages,
        fallback,
    }
}

/// Draws `floor(dim / divide_num)` receptors from a random permutation of the
/// dimensions and filters the population on them.
pub fn tropism_filter(pop: &Population, best_x: &[f64], divide_num: usize, rng: &mut RngStream) -> TropismOutcome {
    let dim = best_x.len();
    let k = receptor_count(dim, divide_num);
    let perm = rng.permutation(dim);
    let positions: Vec<&[f64]> = pop.positions().collect();
    filter_on_receptors(&positions, best_x, &perm[..k])
}

/// Receptor-guided move with explicit draws.
///
/// Dimension `j` moves toward the best by `xi[j] * (best - x)` when
/// `toward[j]`, otherwise by `(xi[j] - 0.5) * width_j * intensity`. The result
/// is `x + eta * s`, projected onto the box.
pub fn tropism_step_with(
    x: &[f64],
    best_x: &[f64],
    eta: f64,
    space: &SearchSpace,
    intensity: f64,
    toward: &[bool],
    xi: &[f64],
) -> Vec<f64> {
    let mut out: Vec<f64> = (0..x.len())
        .map(|j| {
            let s = if toward[j] {
                xi[j] * (best_x[j] - x[j])
            } else {
                (xi[j] - 0.5) * space.width(j) * intensity
            };
            x[j] + eta * s
        })
        .collect();
    space.clamp_in_place(&mut out);
    out
}

/// Receptor-guided move with intensity drawn from `[tropism_min, tropism_max]`.
pub fn tropism_step(
    x: &[f64],
    best_x: &[f64],
    params: &super::VdoParams,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let intensity = rng.uniform_in(params.tropism_min, params.tropism_max);
    let d = x.len();
    let mut toward = Vec::with_capacity(d);
    let mut xi = Vec::with_capacity(d);
    for _ in 0..d {
        toward.push(rng.bernoulli(intensity));
        xi.push(rng.uniform());
    }
    tropism_step_with(x, best_x, params.eta, space, intensity, &toward, &xi)
}
