//! Objective functions: analytic test functions, constrained engineering
//! designs and shifted/rotated benchmark functions loaded from data files.
//!
//! Every [`Problem`] is minimized. Constrained problems use the `g(x) <= 0`
//! convention and are turned into a single fitness by a [`PenaltyPolicy`].

pub mod analytic;
pub mod cec;
pub mod engineering;
mod registry;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::search::SearchSpace;

pub use registry::{by_name, problem_names};

/// Raw objective and inequality constraints of a problem.
pub trait Model: Send + Sync {
    fn objective(&self, x: &[f64]) -> f64;

    /// Inequality constraint values, feasible when every entry is `<= 0`.
    fn constraints(&self, _x: &[f64]) -> Vec<f64> {
        Vec::new()
    }
}

struct FnModel<F>(F);

impl<F> Model for FnModel<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn objective(&self, x: &[f64]) -> f64 {
        (self.0)(x)
    }
}

/// Exterior penalty `f + coefficient * sum(max(0, g)^exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PenaltyPolicy {
    pub coefficient: f64,
    pub exponent: f64,
}

impl Default for PenaltyPolicy {
    fn default() -> Self {
        PenaltyPolicy {
            coefficient: 1e6,
            exponent: 2.0,
        }
    }
}

impl PenaltyPolicy {
    /// Linear exterior penalty. With a coefficient above every constraint's
    /// multiplier its minimizer coincides with the constrained optimum.
    pub fn exact(coefficient: f64) -> Self {
        PenaltyPolicy {
            coefficient,
            exponent: 1.0,
        }
    }
}

/// Adds the exterior penalty of `constraints` to `raw`.
///
/// Returns `raw` unchanged when every constraint is `<= 0`. The result is
/// saturated at `f64::MAX`.
pub fn penalize(raw: f64, constraints: &[f64], policy: &PenaltyPolicy) -> f64 {
    let violation: f64 = constraints
        .iter()
        .filter(|g| **g > 0.0 || g.is_nan())
        .map(|g| if g.is_nan() { f64::MAX } else { g.powf(policy.exponent) })
        .sum();
    if violation == 0.0 {
        return raw;
    }
    let total = raw + policy.coefficient * violation;
    if total.is_finite() {
        total
    } else {
        f64::MAX
    }
}

/// A named minimization problem over a box.
#[derive(Clone)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    model: Arc<dyn Model>,
    penalty: PenaltyPolicy,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dim", &self.space.dim())
            .field("penalty", &self.penalty)
            .finish()
    }
}

impl Problem {
    pub fn new(name: impl Into<String>, space: SearchSpace, model: Arc<dyn Model>) -> Self {
        Problem {
            name: name.into(),
            space,
            model,
            penalty: PenaltyPolicy::default(),
        }
    }

    /// Unconstrained problem from a closure.
    pub fn from_fn<F>(name: impl Into<String>, space: SearchSpace, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::new(name, space, Arc::new(FnModel(f)))
    }

    pub fn with_penalty(mut self, penalty: PenaltyPolicy) -> Self {
        self.penalty = penalty;
        self
    }

    pub fn with_space(mut self, space: SearchSpace) -> Self {
        self.space = space;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn penalty(&self) -> &PenaltyPolicy {
        &self.penalty
    }

    pub fn objective(&self, x: &[f64]) -> f64 {
        self.model.objective(x)
    }

    pub fn constraints(&self, x: &[f64]) -> Vec<f64> {
        self.model.constraints(x)
    }

    /// Largest constraint value (0 for unconstrained problems).
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.constraints(x).into_iter().fold(0.0, f64::max)
    }

    pub fn is_feasible(&self, x: &[f64], tol: f64) -> bool {
        self.constraints(x).iter().all(|g| *g <= tol)
    }

    /// Penalized fitness; non-finite values map to `f64::MAX`.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        let raw = self.model.objective(x);
        let g = self.model.constraints(x);
        let f = penalize(raw, &g, &self.penalty);
        if f.is_finite() {
            f
        } else if f == f64::NEG_INFINITY {
            f64::MIN
        } else {
            f64::MAX
        }
    }
}
