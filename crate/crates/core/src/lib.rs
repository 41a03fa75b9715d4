//! Virus Diffusion Optimizer (VDO) and a small benchmark harness around it.
//!
//! The crate is split into:
//!
//! - [`search`]: search spaces, populations, evaluation budgets and the seeded
//!   random stream shared by every optimizer.
//! - [`vdo`]: the four-phase optimizer (tropism filtering, burst replication,
//!   diffusion, latency reactivation).
//! - [`problems`]: analytic test functions, the pressure vessel, three-bar truss
//!   and welded beam design problems, and loaders for shifted/rotated benchmark
//!   data.
//! - [`baselines`]: PSO, a real-coded GA and uniform random search.
//! - [`harness`]: repeated seeded runs, mean/variance statistics, rank tables
//!   and CSV/JSON output.
//!
//! ```
//! use vdo::problems::analytic;
//! use vdo::vdo::{optimize, VdoParams};
//!
//! let sphere = analytic::sphere(5);
//! let run = optimize(&sphere, 20, 4_000, &VdoParams::default(), 7).unwrap();
//! assert!(run.best_f < 1.0);
//! assert_eq!(run.fes, 4_000);
//! ```

pub mod baselines;
pub mod error;
pub mod harness;
pub mod problems;
pub mod search;
pub mod vdo;

pub use error::{Error, Result};
pub use problems::Problem;
pub use search::{RunResult, SearchSpace};
