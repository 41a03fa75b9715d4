//! Per-cell summary statistics over repeated runs.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub mean: f64,
    /// Population variance (divides by the number of runs).
    pub variance: f64,
    pub best: f64,
    pub worst: f64,
}

impl SummaryStats {
    /// Panics on an empty sample.
    pub fn from_values(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "statistics need at least one value");
        let n = values.len() as f64;
        let best = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let worst = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        // Rounding can push the sum-based mean a hair outside the range.
        let mean = (values.iter().sum::<f64>() / n).clamp(best, worst);
        let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        SummaryStats {
            mean,
            variance,
            best,
            worst,
        }
    }

    pub fn std(&self) -> f64 {
        self.variance.sqrt()
    }
}
