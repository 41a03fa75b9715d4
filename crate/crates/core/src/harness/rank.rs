//! Ascending ranks with shared minimum rank on ties.

use serde::{Deserialize, Serialize};

/// Rank 1 is the smallest value; equal values share the lowest rank of their
/// group, so `[1, 1, 2]` ranks as `[1, 1, 3]`.
pub fn rank(values: &[f64]) -> Vec<usize> {
    values
        .iter()
        .map(|v| 1 + values.iter().filter(|w| w.total_cmp(v).is_lt()).count())
        .collect()
}

/// Mean- and variance-ranks of each optimizer on each problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankTable {
    pub optimizers: Vec<String>,
    pub problems: Vec<String>,
    /// `rank_m[p][o]`
    pub rank_m: Vec<Vec<usize>>,
    pub rank_v: Vec<Vec<usize>>,
}

impl RankTable {
    /// Builds the table from `means[p][o]` and `variances[p][o]`.
    pub fn new(optimizers: Vec<String>, problems: Vec<String>, means: &[Vec<f64>], variances: &[Vec<f64>]) -> Self {
        RankTable {
            optimizers,
            problems,
            rank_m: means.iter().map(|row| rank(row)).collect(),
            rank_v: variances.iter().map(|row| rank(row)).collect(),
        }
    }

    fn average(table: &[Vec<usize>], o: usize) -> f64 {
        table.iter().map(|row| row[o] as f64).sum::<f64>() / table.len() as f64
    }

    pub fn average_rank_m(&self) -> Vec<f64> {
        (0..self.optimizers.len()).map(|o| Self::average(&self.rank_m, o)).collect()
    }

    pub fn average_rank_v(&self) -> Vec<f64> {
        (0..self.optimizers.len()).map(|o| Self::average(&self.rank_v, o)).collect()
    }
}
