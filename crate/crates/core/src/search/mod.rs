//! Search-space, population, budget and randomness primitives shared by all
//! optimizers.

mod population;
mod rng;
mod run;
mod space;

pub use population::{init_population, Elite, Individual, Population};
pub use rng::RngStream;
pub use run::{evaluate, Budget, BudgetExhausted, CurvePoint, Observer, RunContext, RunOptions, RunResult};
pub use space::{clamp_to_bounds, SearchSpace};
