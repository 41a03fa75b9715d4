//! Acceptance criteria. Each test writes one `criterion N ... PASS|FAIL`
//! line directly to stdout (visible without `--nocapture`) and then asserts.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use vdo::baselines::{ga_optimize, pso_optimize, random_search, GaParams, PsoParams};
use vdo::harness::{self, rank, ExperimentConfig, OptimizerSpec, RunRecord};
use vdo::problems::engineering::{pvd, ttd, wbd};
use vdo::problems::{analytic, by_name, engineering, Problem};
use vdo::search::{Individual, Observer, Population, RngStream, SearchSpace};
use vdo::vdo::{burst_factor, optimize, tropism_filter, LatencyArchive, VdoParams};

/// Feasibility tolerance on every constraint of a returned design.
const FEASIBILITY_TOL: f64 = 1e-6;

fn report(n: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {n} [{name}]: {verdict} ({detail})").unwrap();
}

/// Best run of `runs` VDO runs (population 50, `max_fes` each) on `problem`.
fn best_of_runs(problem: &str, runs: usize, max_fes: u64) -> RunRecord {
    let cfg = ExperimentConfig {
        problems: vec![problem.into()],
        optimizers: vec![OptimizerSpec::Vdo(VdoParams::default())],
        runs,
        population: 50,
        max_fes,
        ..Default::default()
    };
    let report = harness::execute(&cfg).unwrap();
    report
        .records
        .into_iter()
        .min_by(|a, b| a.result.best_f.total_cmp(&b.result.best_f))
        .unwrap()
}

fn engineering_criterion(n: u32, name: &str, threshold: f64) -> (bool, f64) {
    let problem = by_name(name, Path::new(".")).unwrap();
    let start = Instant::now();
    let best = best_of_runs(name, 30, 100_000);
    let secs = start.elapsed().as_secs_f64();
    let violation = problem.max_violation(&best.result.best_x);
    let pass = best.result.best_f <= threshold && violation <= FEASIBILITY_TOL;
    report(
        n,
        &format!("{name} optimum"),
        pass,
        &format!(
            "best {:.6} <= {threshold}, max g {:.3e} <= {FEASIBILITY_TOL:e}, x {:?}, {secs:.1}s",
            best.result.best_f, violation, best.result.best_x
        ),
    );
    (pass, secs)
}

#[test]
fn criterion_1_pressure_vessel_optimum() {
    let (pass, _) = engineering_criterion(1, "pvd", 5_890.0);
    assert!(pass);
}

#[test]
fn criterion_2_three_bar_truss_optimum() {
    let (pass, secs) = engineering_criterion(2, "ttd", 263.92);
    assert!(pass);
    assert!(secs < 60.0, "took {secs}s");
}

#[test]
fn criterion_3_welded_beam_optimum() {
    let (pass, _) = engineering_criterion(3, "wbd", 1.6945);
    assert!(pass);
}

/// Agreement to four significant figures: half a unit in the fourth digit.
fn four_significant(computed: f64, tabulated: f64) -> bool {
    let unit = 10f64.powi(tabulated.abs().log10().floor() as i32 - 3);
    (computed - tabulated).abs() <= 0.5 * unit
}

#[test]
fn criterion_4_objectives_at_tabulated_designs() {
    let cases = [
        ("pvd", pvd(&[0.7782, 0.3846, 40.3196, 200.0]).0, 5.8853e3),
        ("ttd", ttd(&[0.7887, 0.4082]).0, 2.638958e2),
        ("wbd", wbd(&[0.2057, 3.2349, 9.0366, 0.2057]).0, 1.6928),
    ];
    let pass = cases.iter().all(|(_, c, t)| four_significant(*c, *t));
    let detail: Vec<String> = cases.iter().map(|(n, c, t)| format!("{n} {c:.6} vs {t}")).collect();
    report(4, "objective formulas", pass, &detail.join(", "));
    assert!(pass);
}

#[test]
fn criterion_5_burst_factor_curve() {
    let max = 1_000_000u64;
    let expected = [1.0, 0.75f64.powf(0.5), 0.5, 0.25f64.powf(1.5), 0.0];
    let fes = [0, max / 4, max / 2, 3 * max / 4, max];
    let closed = fes
        .iter()
        .zip(expected)
        .all(|(&f, e)| (burst_factor(f, max) - e).abs() <= 1e-12);
    let grid: Vec<f64> = (0..=1000).map(|k| burst_factor(k, 1000)).collect();
    let monotone = grid.windows(2).all(|w| w[1] <= w[0]) && grid.iter().all(|b| (0.0..=1.0).contains(b));
    let pass = closed && monotone;
    report(5, "burst factor", pass, &format!("closed form {closed}, non-increasing on grid {monotone}"));
    assert!(pass);
}

#[test]
fn criterion_6_rank_reproduction() {
    // Optimizer order: VDO GA PSO GWO WOA HHO HO NRBO FATA MGO LEA ALA.
    let means = [
        3.82e6, 1.30e9, 3.97e10, 4.34e10, 1.07e10, 6.61e8, 1.07e10, 1.49e11, 3.69e10, 2.11e8, 1.31e11, 1.84e7,
    ];
    let variances = [
        3.03e12, 3.93e16, 1.74e20, 8.33e19, 6.15e18, 6.33e15, 7.01e18, 1.61e20, 5.47e19, 1.93e16, 3.60e20, 2.59e14,
    ];
    let want_m = vec![1, 5, 9, 10, 7, 4, 6, 12, 8, 3, 11, 2];
    let want_v = vec![1, 5, 11, 9, 6, 3, 7, 10, 8, 4, 12, 2];
    let got_m = rank(&means);
    let got_v = rank(&variances);
    let pass = got_m == want_m && got_v == want_v;
    report(
        6,
        "rank reproduction",
        pass,
        &format!("Rank_M {got_m:?} vs {want_m:?}; Rank_V {got_v:?} vs {want_v:?}"),
    );
    assert_eq!(got_v, want_v);
    assert_eq!(got_m, want_m);
}

struct BoundsWatch {
    space: SearchSpace,
    violations: usize,
}

impl Observer for BoundsWatch {
    fn on_evaluation(&mut self, x: &[f64], _f: f64, _best_f: f64) {
        self.violations += usize::from(!self.space.contains(x));
    }
    fn on_iteration(&mut self, _it: usize, _fes: u64, members: &[Individual], _best_f: f64) {
        self.violations += members.iter().filter(|m| !self.space.contains(&m.x)).count();
    }
}

fn property_runs() -> Result<(), String> {
    let problems: Vec<Problem> = vec![
        analytic::rastrigin(5),
        engineering::pressure_vessel(),
        engineering::pressure_vessel_discrete(),
        engineering::welded_beam(),
    ];
    let params = VdoParams::default();
    for p in &problems {
        for (seed, max_fes) in [(1u64, 997u64), (2, 3_000)] {
            let mut watch = BoundsWatch {
                space: p.space().clone(),
                violations: 0,
            };
            let r = vdo::vdo::optimize_with(&p.clone(), 20, max_fes, &params, seed, Default::default(), Some(&mut watch))
                .map_err(|e| e.to_string())?;
            if r.fes != max_fes {
                return Err(format!("{}: fes {} != {max_fes}", p.name(), r.fes));
            }
            if watch.violations > 0 {
                return Err(format!("{}: {} positions out of bounds", p.name(), watch.violations));
            }
            if !r.curve.windows(2).all(|w| w[1].best_f <= w[0].best_f) {
                return Err(format!("{}: curve increases", p.name()));
            }
            let again = optimize(p, 20, max_fes, &params, seed).map_err(|e| e.to_string())?;
            if again != r {
                return Err(format!("{}: seed replay differs", p.name()));
            }
        }
        for (name, r) in [
            ("pso", pso_optimize(p, 20, 1_500, &PsoParams::default(), 4)),
            ("ga", ga_optimize(p, 20, 1_500, &GaParams::default(), 4)),
            ("random", random_search(p, 1_500, 4)),
        ] {
            let r = r.map_err(|e| e.to_string())?;
            if r.fes != 1_500 || !r.curve.windows(2).all(|w| w[1].best_f <= w[0].best_f) {
                return Err(format!("{name} on {}: budget or curve contract broken", p.name()));
            }
        }
    }
    Ok(())
}

fn reactivation_trials() -> Result<(), String> {
    let mut rng = RngStream::new(31);
    for trial in 0..1_000 {
        let n = 1 + rng.index(6);
        let depth = 1 + rng.index(8);
        let dim = 1 + rng.index(4);
        let mut archive = LatencyArchive::new(n, dim, depth).unwrap();
        let mut costs = vec![Vec::new(); n];
        let mut positions = vec![Vec::new(); n];
        for _ in 0..depth {
            for i in 0..n {
                // Coarse values so ties are common.
                let f = rng.index(5) as f64;
                let x: Vec<f64> = (0..dim).map(|_| rng.uniform()).collect();
                archive.record(i, &x, f);
                costs[i].push(f);
                positions[i].push(x);
            }
            archive.advance();
        }
        let mut pop = Population {
            members: (0..n).map(|_| Individual::evaluated(vec![0.0; dim], 99.0)).collect(),
            best: None,
        };
        archive.reactivate(&mut pop).map_err(|e| e.to_string())?;
        for i in 0..n {
            let min = costs[i].iter().cloned().fold(f64::INFINITY, f64::min);
            let slot = costs[i].iter().position(|c| *c == min).unwrap();
            if pop.members[i].f() != min || pop.members[i].x != positions[i][slot] {
                return Err(format!("trial {trial}: member {i} not restored to first argmin slot"));
            }
        }
        if archive.rec() != 1 {
            return Err(format!("trial {trial}: slot counter not reset"));
        }
    }
    Ok(())
}

fn tropism_trials() -> Result<(), String> {
    let mut rng = RngStream::new(17);
    for trial in 0..1_000 {
        let n = 2 + rng.index(30);
        let dim = 1 + rng.index(12);
        let divide = 1 + rng.index(5);
        let members = (0..n)
            .map(|_| Individual::evaluated((0..dim).map(|_| rng.index(4) as f64).collect(), 0.0))
            .collect();
        let pop = Population { members, best: None };
        let best: Vec<f64> = (0..dim).map(|_| rng.index(4) as f64).collect();
        let out = tropism_filter(&pop, &best, divide, &mut rng);
        if out.survivors.is_empty() {
            return Err(format!("trial {trial}: empty survivor set"));
        }
        for st in &out.stages {
            let kept_above = !st.complemented && st.kept == st.above && 2 * st.kept >= st.previous;
            let complemented = st.complemented && 2 * st.above < st.previous && st.kept == st.previous - st.above;
            if !(kept_above || complemented) {
                return Err(format!("trial {trial}: neither shrink branch holds for {st:?}"));
            }
        }
    }
    Ok(())
}

fn penalty_identity() -> Result<usize, String> {
    let problems = [
        engineering::pressure_vessel(),
        engineering::three_bar_truss(),
        engineering::welded_beam(),
    ];
    let mut rng = RngStream::new(8);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 100_000 {
        attempts += 1;
        if attempts > 20_000_000 {
            return Err(format!("only {checked} feasible points found"));
        }
        let p = &problems[attempts % problems.len()];
        let x = p.space().sample(&mut rng);
        if p.constraints(&x).iter().all(|g| *g <= 0.0) {
            if p.evaluate(&x) != p.objective(&x) {
                return Err(format!("{}: penalty altered a feasible value at {x:?}", p.name()));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[test]
fn criterion_7_property_suite() {
    let results = [
        ("budget/bounds/curve/replay", property_runs().map(|_| String::new())),
        ("reactivation argmin x1000", reactivation_trials().map(|_| String::new())),
        ("tropism filter x1000", tropism_trials().map(|_| String::new())),
        ("penalty identity", penalty_identity().map(|n| format!(" on {n} points"))),
    ];
    let pass = results.iter().all(|(_, r)| r.is_ok());
    let detail: Vec<String> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(extra) => format!("{name} ok{extra}"),
            Err(e) => format!("{name} FAILED: {e}"),
        })
        .collect();
    report(7, "property suite", pass, &detail.join("; "));
    assert!(pass);
}

#[test]
fn criterion_8_comparative_sanity() {
    let cfg = ExperimentConfig {
        problems: vec!["sphere:10".into(), "rastrigin:10".into()],
        optimizers: ["vdo", "pso", "ga", "random"]
            .iter()
            .map(|n| OptimizerSpec::from_name(n).unwrap())
            .collect(),
        runs: 10,
        population: 50,
        max_fes: 20_000,
        ..Default::default()
    };
    let rep = harness::execute(&cfg).unwrap();
    let mean = |problem: &str, opt: &str| {
        rep.summary
            .iter()
            .find(|r| r.problem == problem && r.optimizer == opt)
            .unwrap()
            .mean
    };
    let (vdo_s, rnd_s) = (mean("sphere:10", "vdo"), mean("sphere:10", "random"));
    let orders = vdo_s * 1e3 <= rnd_s;
    let worst_sphere = |opt: &str| {
        rep.records
            .iter()
            .filter(|r| r.problem == "sphere:10" && r.optimizer == opt)
            .map(|r| r.result.best_f)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let floors: Vec<(&str, f64)> = ["vdo", "pso", "ga"].iter().map(|o| (*o, worst_sphere(o))).collect();
    let floor_ok = floors.iter().all(|(_, w)| *w < 1e-2);
    let rastrigin_ok = mean("rastrigin:10", "vdo") < mean("rastrigin:10", "random");
    let pass = orders && floor_ok && rastrigin_ok;
    report(
        8,
        "comparative sanity",
        pass,
        &format!(
            "sphere mean vdo {vdo_s:.3e} vs random {rnd_s:.3e}; worst sphere run {floors:?}; rastrigin mean vdo {:.3e} vs random {:.3e}",
            mean("rastrigin:10", "vdo"),
            mean("rastrigin:10", "random")
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_9_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("experiment.json");
    fs::write(
        &cfg_path,
        r#"{
  "problems": ["sphere:5", "ttd", "pvd-discrete"],
  "optimizers": [{"name": "vdo"}, {"name": "pso"}, {"name": "ga"}, {"name": "random"}],
  "runs": 3,
  "population": 20,
  "max_fes": 2000,
  "base_seed": 11
}"#,
    )
    .unwrap();
    let outs: Vec<_> = (0..2).map(|k| dir.path().join(format!("run{k}"))).collect();
    for out in &outs {
        let status = Command::new(env!("CARGO_BIN_EXE_vdo-bench"))
            .args(["run", "--config"])
            .arg(&cfg_path)
            .arg("--out")
            .arg(out)
            .output()
            .unwrap();
        assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    }
    let read = |p: &Path| fs::read(p).unwrap();
    let mut files = vec![Path::new("summary.csv").to_path_buf()];
    let mut curves: Vec<_> = fs::read_dir(outs[0].join("curves"))
        .unwrap()
        .map(|e| Path::new("curves").join(e.unwrap().file_name()))
        .collect();
    curves.sort();
    let n_curves = curves.len();
    files.extend(curves);
    let identical = files.iter().all(|f| read(&outs[0].join(f)) == read(&outs[1].join(f)));
    let pass = identical && n_curves == 3 * 4 * 3;
    report(
        9,
        "CLI determinism",
        pass,
        &format!("{} files compared, {n_curves} curve files", files.len()),
    );
    assert!(pass);
}
