use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::RngStream;

/// Box-bounded search domain with optional grid-valued dimensions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lb: Vec<f64>,
    ub: Vec<f64>,
    integer_mask: Vec<bool>,
    grid: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lb: Vec<f64>, ub: Vec<f64>) -> Result<Self> {
        if lb.is_empty() {
            return Err(Error::config("search space needs at least one dimension"));
        }
        if lb.len() != ub.len() {
            return Err(Error::config(format!(
                "bound length mismatch: lb has {}, ub has {}",
                lb.len(),
                ub.len()
            )));
        }
        for (j, (l, u)) in lb.iter().zip(&ub).enumerate() {
            if !l.is_finite() || !u.is_finite() {
                return Err(Error::config(format!("non-finite bound in dimension {j}")));
            }
            if l > u {
                return Err(Error::config(format!(
                    "lower bound {l} exceeds upper bound {u} in dimension {j}"
                )));
            }
        }
        let dim = lb.len();
        Ok(SearchSpace {
            lb,
            ub,
            integer_mask: vec![false; dim],
            grid: vec![1.0; dim],
        })
    }

    /// Same bounds in every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    /// Marks dimension `j` as grid-valued: positions snap to the nearest
    /// multiple of `grid` after every update.
    pub fn with_grid_dimension(mut self, j: usize, grid: f64) -> Result<Self> {
        if j >= self.dim() {
            return Err(Error::config(format!(
                "grid dimension {j} out of range for dim {}",
                self.dim()
            )));
        }
        if !(grid > 0.0 && grid.is_finite()) {
            return Err(Error::config(format!("grid step must be positive, got {grid}")));
        }
        self.integer_mask[j] = true;
        self.grid[j] = grid;
        Ok(self)
    }

    /// Marks every dimension flagged in `mask` as integer-valued (grid 1.0).
    pub fn with_integer_mask(mut self, mask: &[bool]) -> Result<Self> {
        if mask.len() != self.dim() {
            return Err(Error::config("integer mask length must equal dimension"));
        }
        for (j, &flag) in mask.iter().enumerate() {
            if flag {
                self = self.with_grid_dimension(j, 1.0)?;
            }
        }
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.lb.len()
    }

    pub fn lb(&self) -> &[f64] {
        &self.lb
    }

    pub fn ub(&self) -> &[f64] {
        &self.ub
    }

    pub fn integer_mask(&self) -> &[bool] {
        &self.integer_mask
    }

    pub fn width(&self, j: usize) -> f64 {
        self.ub[j] - self.lb[j]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lb.iter().zip(&self.ub))
                .all(|(v, (l, u))| *l <= *v && *v <= *u)
    }

    /// Projects `x` onto the box in place, snapping grid dimensions.
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim());
        for (j, v) in x.iter_mut().enumerate() {
            let (l, u) = (self.lb[j], self.ub[j]);
            // NaN collapses onto the lower bound.
            let mut c = if v.is_nan() { l } else { v.clamp(l, u) };
            if self.integer_mask[j] {
                let g = self.grid[j];
                c = ((c / g).round() * g).clamp(l, u);
            }
            *v = c;
        }
    }

    pub fn clamp(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        self.clamp_in_place(&mut out);
        out
    }

    /// Draws `lb + u * (ub - lb)` with `u` uniform per dimension, then snaps.
    pub fn sample(&self, rng: &mut RngStream) -> Vec<f64> {
        let mut x: Vec<f64> = self
            .lb
            .iter()
            .zip(&self.ub)
            .map(|(l, u)| l + rng.uniform() * (u - l))
            .collect();
        self.clamp_in_place(&mut x);
        x
    }
}

/// Free-function form of [`SearchSpace::clamp`].
pub fn clamp_to_bounds(x: &[f64], space: &SearchSpace) -> Vec<f64> {
    space.clamp(x)
}
