//! Rolling per-individual memory of recent positions and costs, and the
//! reactivation that restores each individual to its best remembered state.

use crate::error::{Error, Result};
use crate::search::Population;

#[derive(Clone, Debug)]
pub struct LatencyArchive {
    depth: usize,
    /// `positions[i][slot]`
    positions: Vec<Vec<Vec<f64>>>,
    /// `costs[i][slot]`; NaN marks an empty slot.
    costs: Vec<Vec<f64>>,
    /// Current slot, 1-based.
    rec: usize,
}

impl LatencyArchive {
    pub fn new(n: usize, dim: usize, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::config("latency_depth must be at least 1"));
        }
        Ok(LatencyArchive {
            depth,
            positions: vec![vec![vec![0.0; dim]; depth]; n],
            costs: vec![vec![f64::NAN; depth]; n],
            rec: 1,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn rec(&self) -> usize {
        self.rec
    }

    /// Stores `x` and `f` for individual `i` in the current slot.
    pub fn record(&mut self, i: usize, x: &[f64], f: f64) {
        let s = self.rec - 1;
        self.positions[i][s].copy_from_slice(x);
        self.costs[i][s] = f;
    }

    /// Slot `slot` (1-based) of individual `i`, if filled.
    pub fn slot(&self, i: usize, slot: usize) -> Option<(&[f64], f64)> {
        let c = self.costs[i][slot - 1];
        (!c.is_nan()).then(|| (self.positions[i][slot - 1].as_slice(), c))
    }

    /// Moves to the next slot; true once every slot has been written since
    /// the last reset.
    pub fn advance(&mut self) -> bool {
        self.rec += 1;
        self.is_full()
    }

    pub fn is_full(&self) -> bool {
        self.rec > self.depth
    }

    /// Restores every member to its lowest-cost archived state (lowest slot
    /// on ties) and resets the slot counter.
    pub fn reactivate(&mut self, pop: &mut Population) -> Result<()> {
        if !self.is_full() {
            return Err(Error::config(format!(
                "reactivation requires a full archive (slot {} of {})",
                self.rec, self.depth
            )));
        }
        for (i, member) in pop.members.iter_mut().enumerate() {
            let mut best_slot = 0;
            for s in 1..self.depth {
                if self.costs[i][s] < self.costs[i][best_slot] {
                    best_slot = s;
                }
            }
            let f = self.costs[i][best_slot];
            debug_assert!(pop.best.as_ref().is_none_or(|e| e.f <= f), "archive beat the global best");
            member.x.copy_from_slice(&self.positions[i][best_slot]);
            member.fitness = Some(f);
        }
        self.rec = 1;
        Ok(())
    }
}
