//! Reference optimizers sharing the budget, bounds and determinism contract
//! of [`crate::vdo::optimize`].

pub mod ga;
pub mod pso;
pub mod random;

pub use ga::{ga_optimize, ga_optimize_with, GaParams};
pub use pso::{pso_optimize, pso_optimize_with, PsoParams};
pub use random::{random_search, random_search_with, DEFAULT_BATCH};
