//! Classic scalable test functions with known minimum value 0.

use std::f64::consts::{E, PI};

use crate::problems::Problem;
use crate::search::SearchSpace;

pub fn sphere_fn(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rosenbrock_fn(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[0] * w[0] - w[1]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn rastrigin_fn(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley_fn(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn griewank_fn(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    s - p + 1.0
}

pub fn zakharov_fn(x: &[f64]) -> f64 {
    let s1: f64 = x.iter().map(|v| v * v).sum();
    let s2: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum();
    s1 + s2.powi(2) + s2.powi(4)
}

/// Levy function, minimum at `x = 1`.
pub fn levy_fn(x: &[f64]) -> f64 {
    let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
    levy_w(&w)
}

pub(crate) fn levy_w(w: &[f64]) -> f64 {
    let d = w.len();
    let head = (PI * w[0]).sin().powi(2);
    let mid: f64 = w[..d - 1]
        .iter()
        .map(|wi| (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2)))
        .sum();
    let wd = w[d - 1];
    let tail = (wd - 1.0).powi(2) * (1.0 + (2.0 * PI * wd).sin().powi(2));
    head + mid + tail
}

pub fn bent_cigar_fn(x: &[f64]) -> f64 {
    x[0] * x[0] + 1e6 * x[1..].iter().map(|v| v * v).sum::<f64>()
}

/// Schwefel 2.26 offset so that the minimum value is (numerically) 0.
pub fn schwefel_fn(x: &[f64]) -> f64 {
    418.982_887_272_433_9 * x.len() as f64 - x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

/// The scalable analytic functions known to the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticFn {
    Sphere,
    Rosenbrock,
    Rastrigin,
    Ackley,
    Griewank,
    Zakharov,
    Levy,
    BentCigar,
    Schwefel,
}

impl AnalyticFn {
    pub const ALL: [AnalyticFn; 9] = [
        AnalyticFn::Sphere,
        AnalyticFn::Rosenbrock,
        AnalyticFn::Rastrigin,
        AnalyticFn::Ackley,
        AnalyticFn::Griewank,
        AnalyticFn::Zakharov,
        AnalyticFn::Levy,
        AnalyticFn::BentCigar,
        AnalyticFn::Schwefel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AnalyticFn::Sphere => "sphere",
            AnalyticFn::Rosenbrock => "rosenbrock",
            AnalyticFn::Rastrigin => "rastrigin",
            AnalyticFn::Ackley => "ackley",
            AnalyticFn::Griewank => "griewank",
            AnalyticFn::Zakharov => "zakharov",
            AnalyticFn::Levy => "levy",
            AnalyticFn::BentCigar => "bent_cigar",
            AnalyticFn::Schwefel => "schwefel",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn function(self) -> fn(&[f64]) -> f64 {
        match self {
            AnalyticFn::Sphere => sphere_fn,
            AnalyticFn::Rosenbrock => rosenbrock_fn,
            AnalyticFn::Rastrigin => rastrigin_fn,
            AnalyticFn::Ackley => ackley_fn,
            AnalyticFn::Griewank => griewank_fn,
            AnalyticFn::Zakharov => zakharov_fn,
            AnalyticFn::Levy => levy_fn,
            AnalyticFn::BentCigar => bent_cigar_fn,
            AnalyticFn::Schwefel => schwefel_fn,
        }
    }

    /// Symmetric default box `[-b, b]` (Zakharov uses `[-5, 10]`).
    pub fn bounds(self) -> (f64, f64) {
        match self {
            AnalyticFn::Sphere | AnalyticFn::BentCigar => (-100.0, 100.0),
            AnalyticFn::Rosenbrock => (-30.0, 30.0),
            AnalyticFn::Rastrigin => (-5.12, 5.12),
            AnalyticFn::Ackley => (-32.768, 32.768),
            AnalyticFn::Griewank => (-600.0, 600.0),
            AnalyticFn::Zakharov => (-5.0, 10.0),
            AnalyticFn::Levy => (-10.0, 10.0),
            AnalyticFn::Schwefel => (-500.0, 500.0),
        }
    }

    /// Minimizer in dimension `dim`.
    pub fn optimum(self, dim: usize) -> Vec<f64> {
        let v = match self {
            AnalyticFn::Rosenbrock | AnalyticFn::Levy => 1.0,
            AnalyticFn::Schwefel => 420.968_746_227_503_6,
            _ => 0.0,
        };
        vec![v; dim]
    }

    pub fn problem(self, dim: usize) -> Problem {
        let (lo, hi) = self.bounds();
        let space = SearchSpace::uniform(dim, lo, hi).expect("static bounds are valid");
        let f = self.function();
        Problem::from_fn(format!("{}:{}", self.name(), dim), space, f)
    }
}

pub fn sphere(dim: usize) -> Problem {
    AnalyticFn::Sphere.problem(dim)
}

pub fn rastrigin(dim: usize) -> Problem {
    AnalyticFn::Rastrigin.problem(dim)
}

pub fn rosenbrock(dim: usize) -> Problem {
    AnalyticFn::Rosenbrock.problem(dim)
}

/// Sphere, Rosenbrock, Rastrigin, Ackley, Griewank, Zakharov and Levy in
/// dimension `dim`.
pub fn analytic_suite(dim: usize) -> Vec<Problem> {
    AnalyticFn::ALL[..7].iter().map(|f| f.problem(dim)).collect()
}
