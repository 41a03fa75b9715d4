//! Experiment outputs and the `vdo-bench` binary.

use std::fs;
use std::path::Path;
use std::process::Command;

use vdo::harness::{self, read_curve, read_summary, ExperimentConfig, OptimizerSpec, SummaryStats};

const BIN: &str = env!("CARGO_BIN_EXE_vdo-bench");

fn small_config(out: &Path) -> ExperimentConfig {
    ExperimentConfig {
        problems: vec!["sphere:4".into(), "ttd".into()],
        optimizers: ["vdo", "pso", "ga", "random"]
            .iter()
            .map(|n| OptimizerSpec::from_name(n).unwrap())
            .collect(),
        runs: 2,
        population: 10,
        max_fes: 600,
        base_seed: 3,
        output: out.to_path_buf(),
        ..Default::default()
    }
}

#[test]
fn outputs_have_expected_shape_and_consistent_statistics() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("res");
    let cfg = small_config(&out);
    harness::run_experiment(&cfg).unwrap();

    let rows = read_summary(&out.join("summary.csv")).unwrap();
    assert_eq!(rows.len(), 2 * 4);
    let curves: Vec<_> = fs::read_dir(out.join("curves")).unwrap().collect();
    assert_eq!(curves.len(), 2 * 4 * 2);

    for row in &rows {
        let finals: Vec<f64> = (0..cfg.runs)
            .map(|r| {
                let name = harness::emit::curve_file_name(&row.problem, &row.optimizer, r);
                read_curve(&out.join("curves").join(name)).unwrap().last().unwrap().best_f
            })
            .collect();
        let s = SummaryStats::from_values(&finals);
        assert_eq!(s.mean, row.mean);
        assert_eq!(s.variance, row.variance);
        assert_eq!((s.best, s.worst), (row.best, row.worst));
        assert_eq!(row.std, row.variance.sqrt());
        assert!((1..=4).contains(&row.rank_m) && (1..=4).contains(&row.rank_v));
    }

    let echoed = ExperimentConfig::load(&out.join("config.json")).unwrap();
    assert_eq!(echoed, cfg);
    let ranks = fs::read_to_string(out.join("ranks.csv")).unwrap();
    assert!(ranks.starts_with("optimizer,avg_rank_m,avg_rank_v\n"));
    assert_eq!(ranks.lines().count(), 5);
}

#[test]
fn constant_objective_single_run_cell() {
    let rows = harness::rerank(&[harness::SummaryRow {
        problem: "c".into(),
        optimizer: "vdo".into(),
        mean: 7.0,
        variance: 0.0,
        best: 7.0,
        worst: 7.0,
        rank_m: 0,
        rank_v: 0,
        std: 0.0,
    }]);
    assert_eq!((rows.0[0].rank_m, rows.0[0].rank_v), (1, 1));
}

#[test]
fn zero_runs_fail_before_writing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never");
    let cfg = ExperimentConfig {
        runs: 0,
        ..small_config(&out)
    };
    assert!(matches!(harness::run_experiment(&cfg), Err(vdo::Error::Config(_))));
    assert!(!out.exists());
}

#[test]
fn cli_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("cfg.json");
    let mut cfg = small_config(&dir.path().join("unused"));
    cfg.problems = vec!["rastrigin:3".into(), "pvd".into()];
    fs::write(&cfg_path, serde_json::to_string(&cfg).unwrap()).unwrap();

    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("out{k}"));
        let status = Command::new(BIN)
            .args(["run", "--config"])
            .arg(&cfg_path)
            .arg("--out")
            .arg(&out)
            .output()
            .unwrap();
        assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
        outputs.push(out);
    }
    let summary = |o: &Path| fs::read(o.join("summary.csv")).unwrap();
    assert_eq!(summary(&outputs[0]), summary(&outputs[1]));
    let mut names: Vec<_> = fs::read_dir(outputs[0].join("curves"))
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 16);
    for name in names {
        let a = fs::read(outputs[0].join("curves").join(&name)).unwrap();
        let b = fs::read(outputs[1].join("curves").join(&name)).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
}

#[test]
fn cli_inline_flags_list_and_rank() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inline");
    let run = Command::new(BIN)
        .args(["run", "--problem", "sphere:3", "--algo", "vdo,random", "--runs", "2"])
        .args(["--pop", "8", "--max-fes", "200", "--seed", "1", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(run.status.success());
    assert_eq!(read_summary(&out.join("summary.csv")).unwrap().len(), 2);

    let list = Command::new(BIN).arg("list").output().unwrap();
    let text = String::from_utf8(list.stdout).unwrap();
    for name in ["pvd", "ttd", "wbd", "vdo", "pso", "ga", "random"] {
        assert!(text.contains(name), "{name} missing from list");
    }

    let rank = Command::new(BIN).arg("rank").arg(out.join("summary.csv")).output().unwrap();
    assert!(rank.status.success());
    let text = String::from_utf8(rank.stdout).unwrap();
    assert!(text.contains("optimizer,avg_rank_m,avg_rank_v"));
}

#[test]
fn cli_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| Command::new(BIN).args(args).output().unwrap().status.code();
    let out = dir.path().join("x");
    let out = out.to_str().unwrap();
    assert_eq!(code(&["run", "--problem", "nope", "--algo", "vdo", "--out", out]), Some(2));
    assert_eq!(code(&["run", "--problem", "pvd", "--algo", "woa", "--out", out]), Some(2));
    assert_eq!(code(&["run", "--problem", "pvd", "--algo", "vdo", "--runs", "0", "--out", out]), Some(2));
    let cec = dir.path().to_str().unwrap();
    assert_eq!(
        code(&["run", "--problem", "cec2017:1:10", "--algo", "vdo", "--cec-data", cec, "--out", out]),
        Some(3)
    );
    assert_eq!(code(&["run", "--config", "/definitely/not/here.json"]), Some(4));
    assert_eq!(code(&["rank", "/definitely/not/summary.csv"]), Some(4));
}
