//! Constrained engineering design problems: pressure vessel (PVD), three-bar
//! truss (TTD) and welded beam (WBD).
//!
//! Constraint vectors follow the `g(x) <= 0` convention.

use std::f64::consts::{PI, SQRT_2};
use std::sync::Arc;

use crate::problems::{Model, PenaltyPolicy, Problem};
use crate::search::SearchSpace;

/// Thickness values are multiples of this plate gauge in the discrete variant.
pub const PVD_GAUGE: f64 = 0.0625;

/// Pressure vessel cost and constraints for `(z1, z2, x3, x4)`: shell and
/// head thickness, inner radius, and cylinder length.
pub fn pvd(x: &[f64]) -> (f64, [f64; 4]) {
    let [z1, z2, r, l] = [x[0], x[1], x[2], x[3]];
    let f = 1.7781 * z2 * r * r + 0.6224 * z1 * r * l + 3.1661 * z1 * z1 * l + 19.84 * z1 * z1 * r;
    let g = [
        0.0193 * r - z1,
        0.00954 * r - z2,
        l - 240.0,
        1_296_000.0 - PI * r * r * l - 4.0 / 3.0 * PI * r * r * r,
    ];
    (f, g)
}

pub const TTD_H: f64 = 100.0;
pub const TTD_P: f64 = 2.0;
pub const TTD_SIGMA: f64 = 2.0;
/// Lower bound on both cross-sections; keeps the stress denominators nonzero.
pub const TTD_MIN_AREA: f64 = 1e-6;

/// Three-bar truss volume and stress constraints for cross-sections `(x1, x2)`.
pub fn ttd(x: &[f64]) -> (f64, [f64; 3]) {
    let (x1, x2) = (x[0], x[1]);
    let f = (2.0 * SQRT_2 * x1 + x2) * TTD_H;
    let denom = SQRT_2 * x1 * x1 + 2.0 * x1 * x2;
    let denom3 = x1 + SQRT_2 * x2;
    let guard = |num: f64, d: f64| {
        if d > f64::MIN_POSITIVE && d.is_finite() {
            num / d * TTD_P - TTD_SIGMA
        } else {
            f64::MAX
        }
    };
    let g = [
        guard(SQRT_2 * x1 + x2, denom),
        guard(x2, denom),
        guard(1.0, denom3),
    ];
    (f, g)
}

pub const WBD_P: f64 = 6000.0;
pub const WBD_L: f64 = 14.0;
pub const WBD_E: f64 = 30e6;
pub const WBD_G: f64 = 12e6;
pub const WBD_TAU_MAX: f64 = 13_600.0;
pub const WBD_SIGMA_MAX: f64 = 30_000.0;
pub const WBD_DELTA_MAX: f64 = 0.25;

/// Intermediate quantities of the welded beam model.
#[derive(Clone, Copy, Debug)]
pub struct WeldedBeamStress {
    pub tau_prime: f64,
    pub tau_double_prime: f64,
    pub tau: f64,
    pub sigma: f64,
    pub delta: f64,
    pub buckling_load: f64,
}

/// Shear stress, bending stress, deflection and buckling load for
/// `(h, l, t, b) = (x1, x2, x3, x4)`.
pub fn wbd_stress(x: &[f64]) -> WeldedBeamStress {
    let [x1, x2, x3, x4] = [x[0], x[1], x[2], x[3]];
    let (p, l, e, g) = (WBD_P, WBD_L, WBD_E, WBD_G);
    let root = (2.0 * x1 * x2).sqrt();
    let tau_prime = p / root;
    let m = p * (l + x2 / 2.0);
    let r = (x2 * x2 / 4.0 + (x1 + x3).powi(2) / 4.0).sqrt();
    let j = 2.0 * (root * (x2 * x2 / 12.0 + (x1 + x3).powi(2) / 4.0));
    let tau_double_prime = m * r / j;
    let tau = (tau_prime.powi(2) + 2.0 * tau_prime * tau_double_prime * x2 / (2.0 * r)
        + tau_double_prime.powi(2))
    .sqrt();
    let sigma = 6.0 * p * l / (x4 * x3 * x3);
    let delta = 4.0 * p * l.powi(3) / (e * x3.powi(3) * x4);
    let buckling_load = 4.013 * e * (x3 * x3 * x4.powi(6) / 36.0).sqrt() / (l * l)
        * (1.0 - x3 / (2.0 * l) * (e / (4.0 * g)).sqrt());
    WeldedBeamStress {
        tau_prime,
        tau_double_prime,
        tau,
        sigma,
        delta,
        buckling_load,
    }
}

/// Welded beam fabrication cost and its seven constraints.
pub fn wbd(x: &[f64]) -> (f64, [f64; 7]) {
    let [x1, x2, x3, x4] = [x[0], x[1], x[2], x[3]];
    let f = 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2);
    let s = wbd_stress(x);
    let g = [
        s.tau - WBD_TAU_MAX,
        s.sigma - WBD_SIGMA_MAX,
        x1 - x4,
        0.10471 * x1 * x1 + 0.04811 * x3 * x4 * (14.0 + x2) - 5.0,
        0.125 - x1,
        s.delta - WBD_DELTA_MAX,
        WBD_P - s.buckling_load,
    ];
    (f, g)
}

struct Pvd;
struct Ttd;
struct Wbd;

impl Model for Pvd {
    fn objective(&self, x: &[f64]) -> f64 {
        pvd(x).0
    }
    fn constraints(&self, x: &[f64]) -> Vec<f64> {
        pvd(x).1.to_vec()
    }
}

impl Model for Ttd {
    fn objective(&self, x: &[f64]) -> f64 {
        ttd(x).0
    }
    fn constraints(&self, x: &[f64]) -> Vec<f64> {
        ttd(x).1.to_vec()
    }
}

impl Model for Wbd {
    fn objective(&self, x: &[f64]) -> f64 {
        wbd(x).0
    }
    fn constraints(&self, x: &[f64]) -> Vec<f64> {
        wbd(x).1.to_vec()
    }
}

/// Penalty attached to the engineering problems by default.
///
/// Linear rather than quadratic: with a quadratic penalty of this weight the
/// penalized minimum of the pressure vessel sits at a violation of about
/// 3.6e-3 (and the truss at 6.6e-5), so minimizing it does not yield a
/// feasible design. The linear penalty is exact once the coefficient exceeds
/// the constraint multipliers.
pub fn default_penalty() -> PenaltyPolicy {
    PenaltyPolicy::exact(1e6)
}

/// Pressure vessel with continuous thickness variables in
/// `[0.0625, 0.0625 * 99]`.
pub fn pressure_vessel() -> Problem {
    let space = SearchSpace::new(
        vec![PVD_GAUGE, PVD_GAUGE, 10.0, 10.0],
        vec![PVD_GAUGE * 99.0, PVD_GAUGE * 99.0, 200.0, 200.0],
    )
    .expect("static bounds are valid");
    Problem::new("pvd", space, Arc::new(Pvd)).with_penalty(default_penalty())
}

/// Pressure vessel with thicknesses restricted to multiples of 0.0625.
pub fn pressure_vessel_discrete() -> Problem {
    let p = pressure_vessel();
    let space = p
        .space()
        .clone()
        .with_grid_dimension(0, PVD_GAUGE)
        .and_then(|s| s.with_grid_dimension(1, PVD_GAUGE))
        .expect("static grid is valid");
    Problem::new("pvd-discrete", space, Arc::new(Pvd)).with_penalty(*p.penalty())
}

pub fn three_bar_truss() -> Problem {
    let space = SearchSpace::uniform(2, TTD_MIN_AREA, 1.0).expect("static bounds are valid");
    Problem::new("ttd", space, Arc::new(Ttd)).with_penalty(default_penalty())
}

pub fn welded_beam() -> Problem {
    let space = SearchSpace::new(vec![0.1, 0.1, 0.1, 0.1], vec![2.0, 10.0, 10.0, 2.0])
        .expect("static bounds are valid");
    Problem::new("wbd", space, Arc::new(Wbd)).with_penalty(default_penalty())
}
