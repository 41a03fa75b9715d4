use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::search::{Individual, Population};

/// Signal that the evaluation budget has been consumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("function evaluation budget exhausted")]
pub struct BudgetExhausted;

/// Function-evaluation counter with a hard cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    fes: u64,
    max_fes: u64,
}

impl Budget {
    pub fn new(max_fes: u64) -> Result<Self> {
        if max_fes == 0 {
            return Err(Error::config("max_fes must be positive"));
        }
        Ok(Budget { fes: 0, max_fes })
    }

    pub fn fes(&self) -> u64 {
        self.fes
    }

    pub fn max_fes(&self) -> u64 {
        self.max_fes
    }

    pub fn remaining(&self) -> u64 {
        self.max_fes - self.fes
    }

    pub fn is_exhausted(&self) -> bool {
        self.fes >= self.max_fes
    }

    fn consume(&mut self) -> std::result::Result<(), BudgetExhausted> {
        if self.is_exhausted() {
            return Err(BudgetExhausted);
        }
        self.fes += 1;
        Ok(())
    }
}

/// Evaluates `ind` against `problem`, charging one evaluation to `budget`
/// and updating the population's best-so-far on strict improvement.
pub fn evaluate(
    ind: &mut Individual,
    problem: &Problem,
    budget: &mut Budget,
    pop: &mut Population,
) -> std::result::Result<f64, BudgetExhausted> {
    budget.consume()?;
    let f = problem.evaluate(&ind.x);
    ind.fitness = Some(f);
    pop.offer(&ind.x, f);
    Ok(f)
}

/// Hooks into a running optimizer; all methods default to no-ops.
pub trait Observer {
    /// Called after every objective evaluation.
    fn on_evaluation(&mut self, _x: &[f64], _f: f64, _best_f: f64) {}

    /// Called after every completed outer iteration (and once after
    /// initialization, with iteration 0).
    fn on_iteration(&mut self, _iteration: usize, _fes: u64, _members: &[Individual], _best_f: f64) {}
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOptions {
    /// Keep the best-so-far value after every single evaluation.
    pub dense_trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub iteration: usize,
    pub fes: u64,
    pub best_f: f64,
}

/// Outcome of one optimizer run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub best_x: Vec<f64>,
    pub best_f: f64,
    /// One point per outer iteration; entry 0 is the post-initialization state.
    pub curve: Vec<CurvePoint>,
    pub fes: u64,
    /// Per-evaluation best-so-far log, present when requested.
    pub trace: Option<Vec<f64>>,
}

/// Bookkeeping shared by all optimizer loops: budget, curve, optional dense
/// trace and observer.
pub struct RunContext<'p, 'o> {
    problem: &'p Problem,
    budget: Budget,
    curve: Vec<CurvePoint>,
    trace: Option<Vec<f64>>,
    observer: Option<&'o mut dyn Observer>,
}

impl<'p, 'o> RunContext<'p, 'o> {
    pub fn new(
        problem: &'p Problem,
        max_fes: u64,
        options: RunOptions,
        observer: Option<&'o mut dyn Observer>,
    ) -> Result<Self> {
        Ok(RunContext {
            problem,
            budget: Budget::new(max_fes)?,
            curve: Vec::new(),
            trace: options.dense_trace.then(Vec::new),
            observer,
        })
    }

    pub fn problem(&self) -> &'p Problem {
        self.problem
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn is_exhausted(&self) -> bool {
        self.budget.is_exhausted()
    }

    pub fn evaluate(
        &mut self,
        ind: &mut Individual,
        pop: &mut Population,
    ) -> std::result::Result<f64, BudgetExhausted> {
        let f = evaluate(ind, self.problem, &mut self.budget, pop)?;
        let best_f = pop.best().f;
        if let Some(t) = self.trace.as_mut() {
            t.push(best_f);
        }
        if let Some(o) = self.observer.as_deref_mut() {
            o.on_evaluation(&ind.x, f, best_f);
        }
        Ok(f)
    }

    /// Evaluates every unevaluated member in order.
    pub fn evaluate_all(&mut self, pop: &mut Population) -> std::result::Result<(), BudgetExhausted> {
        for i in 0..pop.members.len() {
            if pop.members[i].fitness.is_none() {
                let mut ind = std::mem::replace(&mut pop.members[i], Individual::unevaluated(Vec::new()));
                let res = self.evaluate(&mut ind, pop);
                pop.members[i] = ind;
                res?;
            }
        }
        Ok(())
    }

    /// Records the end of an outer iteration.
    pub fn checkpoint(&mut self, iteration: usize, pop: &Population) {
        let best_f = pop.best().f;
        self.curve.push(CurvePoint {
            iteration,
            fes: self.budget.fes(),
            best_f,
        });
        if let Some(o) = self.observer.as_deref_mut() {
            o.on_iteration(iteration, self.budget.fes(), &pop.members, best_f);
        }
    }

    pub fn finish(self, pop: &Population) -> RunResult {
        let best = pop.best();
        RunResult {
            best_x: best.x.clone(),
            best_f: best.f,
            curve: self.curve,
            fes: self.budget.fes(),
            trace: self.trace,
        }
    }
}
