use crate::error::{Error, Result};
use crate::search::{RngStream, SearchSpace};

/// A candidate position and its cached fitness (`None` until evaluated).
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub fitness: Option<f64>,
}

impl Individual {
    pub fn unevaluated(x: Vec<f64>) -> Self {
        Individual { x, fitness: None }
    }

    pub fn evaluated(x: Vec<f64>, fitness: f64) -> Self {
        Individual {
            x,
            fitness: Some(fitness),
        }
    }

    /// Fitness of an evaluated individual.
    ///
    /// Panics if the individual was never evaluated.
    pub fn f(&self) -> f64 {
        self.fitness.expect("individual has not been evaluated")
    }
}

/// Best-so-far position and fitness.
#[derive(Clone, Debug, PartialEq)]
pub struct Elite {
    pub x: Vec<f64>,
    pub f: f64,
}

#[derive(Clone, Debug)]
pub struct Population {
    pub members: Vec<Individual>,
    pub best: Option<Elite>,
}

impl Population {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Offers an evaluated point to the best-so-far record; accepted only
    /// when strictly better.
    pub fn offer(&mut self, x: &[f64], f: f64) -> bool {
        match &self.best {
            Some(e) if e.f <= f => false,
            _ => {
                self.best = Some(Elite { x: x.to_vec(), f });
                true
            }
        }
    }

    pub fn best(&self) -> &Elite {
        self.best.as_ref().expect("population has no evaluated member")
    }

    pub fn best_f(&self) -> Option<f64> {
        self.best.as_ref().map(|e| e.f)
    }

    pub fn positions(&self) -> impl Iterator<Item = &[f64]> {
        self.members.iter().map(|m| m.x.as_slice())
    }
}

/// Uniformly samples `n` unevaluated individuals inside `space`.
pub fn init_population(space: &SearchSpace, n: usize, rng: &mut RngStream) -> Result<Population> {
    if n < 2 {
        return Err(Error::config(format!("population size must be at least 2, got {n}")));
    }
    let members = (0..n)
        .map(|_| Individual::unevaluated(space.sample(rng)))
        .collect();
    Ok(Population {
        members,
        best: None,
    })
}
