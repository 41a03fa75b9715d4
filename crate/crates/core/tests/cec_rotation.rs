//! Shifted/rotated composition checked against a brute-force oracle built
//! from a random orthogonal matrix.

use std::path::Path;

use vdo::problems::analytic::{bent_cigar_fn, rastrigin_fn, zakharov_fn};
use vdo::problems::by_name;
use vdo::problems::cec::{compose, load_cec_bundle, CecDataBundle, Suite};
use vdo::search::RngStream;
use vdo::Error;

type BaseFn = fn(&[f64]) -> f64;

/// Gram-Schmidt on a gaussian matrix; rows are orthonormal.
fn random_orthogonal(d: usize, rng: &mut RngStream) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(d);
    while rows.len() < d {
        let mut v: Vec<f64> = (0..d).map(|_| rng.normal()).collect();
        for r in &rows {
            let dot: f64 = v.iter().zip(r).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(r).for_each(|(a, b)| *a -= dot * b);
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-8 {
            rows.push(v.into_iter().map(|a| a / norm).collect());
        }
    }
    rows
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn transpose(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    (0..m.len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

fn bundle(id: u32, shift: Vec<f64>, q: &[Vec<f64>]) -> CecDataBundle {
    CecDataBundle {
        function_id: id,
        dim: shift.len(),
        shift,
        rotation: q.iter().flatten().cloned().collect(),
        shuffle: None,
    }
}

#[test]
fn rotated_value_at_inverse_image_equals_base() {
    let d = 6;
    let mut rng = RngStream::new(77);
    let q = random_orthogonal(d, &mut rng);
    let qt = transpose(&q);
    let cases: [(u32, BaseFn); 3] = [(1, bent_cigar_fn), (3, zakharov_fn), (5, rastrigin_fn)];
    for (id, base) in cases {
        let problem = compose(Suite::Cec2017, bundle(id, vec![0.0; d], &q)).unwrap();
        let bias = 100.0 * id as f64;
        for _ in 0..20 {
            let y: Vec<f64> = (0..d).map(|_| rng.uniform_in(-2.0, 2.0)).collect();
            // Rastrigin is composed on a scaled input, so undo the rate too.
            let rate = if id == 5 { 0.0512 } else { 1.0 };
            let x: Vec<f64> = mat_vec(&qt, &y).into_iter().map(|v| v / rate).collect();
            let got = problem.evaluate(&x);
            let want = base(&y) + bias;
            assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "F{id}: {got} vs {want}");
        }
    }
}

#[test]
fn shifted_optimum_yields_bias_after_file_round_trip() {
    let d = 10;
    let dir = tempfile::tempdir().unwrap();
    let mut rng = RngStream::new(5);
    let q = random_orthogonal(d, &mut rng);
    for id in [1u32, 3, 4, 5, 9, 10] {
        let shift: Vec<f64> = (0..d).map(|_| rng.uniform_in(-80.0, 80.0)).collect();
        bundle(id, shift.clone(), &q).write(dir.path()).unwrap();
        let p = load_cec_bundle(dir.path(), Suite::Cec2017, id, d).unwrap();
        let bias = 100.0 * id as f64;
        let at_shift = p.evaluate(&shift);
        assert!((at_shift - bias).abs() < 1e-6, "F{id}: {at_shift}");
        let off: Vec<f64> = shift.iter().map(|s| s + 1.0).collect();
        assert!(p.evaluate(&off) > bias, "F{id}");
        let by_registry = by_name(&format!("cec2017:F{id}:{d}"), dir.path()).unwrap();
        assert_eq!(by_registry.evaluate(&off), p.evaluate(&off));
    }
}

#[test]
fn missing_or_unsupported_data_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    match by_name("cec2017:1:10", dir.path()) {
        Err(Error::DataFormat { path, .. }) | Err(Error::Io { path, .. }) => {
            assert!(path.ends_with("shift_data_1.txt") || path.ends_with("M_1_D10.txt"), "{path:?}");
        }
        other => panic!("expected a missing-file error, got {other:?}"),
    }
    assert!(matches!(
        by_name("cec2017:11:10", Path::new(".")),
        Err(Error::UnsupportedFunction(_))
    ));
}
