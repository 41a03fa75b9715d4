//! Shifted and rotated benchmark functions built from externally supplied
//! data files.
//!
//! A bundle directory holds plain-text, whitespace-separated, row-major files
//! named after the official distribution:
//!
//! - `shift_data_<id>.txt`: first row holds at least `dim` reals (the shift).
//! - `M_<id>_D<dim>.txt`: at least `dim` rows of exactly `dim` reals (the
//!   rotation matrix).
//! - `shuffle_data_<id>_D<dim>.txt` (optional): a permutation of `1..=dim`.
//!
//! The composed function is `base(M * (rate * (x - shift))) + bias` on the box
//! `[-100, 100]^dim`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::analytic::{bent_cigar_fn, levy_w, rastrigin_fn, zakharov_fn};
use crate::problems::{Model, Problem};
use crate::search::SearchSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Cec2017,
    Cec2022,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Cec2017 => "cec2017",
            Suite::Cec2022 => "cec2022",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "cec2017" => Some(Suite::Cec2017),
            "cec2022" => Some(Suite::Cec2022),
            _ => None,
        }
    }

    /// Base function and bias for a function id, if this crate implements it.
    pub fn resolve(self, id: u32) -> Result<(BaseFn, f64)> {
        let base = match (self, id) {
            (Suite::Cec2017, 1) => BaseFn::BentCigar,
            (Suite::Cec2017, 3) | (Suite::Cec2022, 1) => BaseFn::Zakharov,
            (Suite::Cec2017, 4) | (Suite::Cec2022, 2) => BaseFn::Rosenbrock,
            (Suite::Cec2017, 5) => BaseFn::Rastrigin,
            (Suite::Cec2017, 9) | (Suite::Cec2022, 5) => BaseFn::Levy,
            (Suite::Cec2017, 10) => BaseFn::Schwefel,
            _ => {
                return Err(Error::UnsupportedFunction(format!(
                    "{} F{id} (only shifted/rotated bent cigar, zakharov, rosenbrock, rastrigin, levy and schwefel are implemented)",
                    self.name()
                )))
            }
        };
        let bias = match (self, id) {
            (Suite::Cec2017, _) => 100.0 * id as f64,
            (Suite::Cec2022, 1) => 300.0,
            (Suite::Cec2022, 2) => 400.0,
            (Suite::Cec2022, _) => 900.0,
        };
        Ok((base, bias))
    }
}

/// Base functions available for composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseFn {
    BentCigar,
    Zakharov,
    Rosenbrock,
    Rastrigin,
    Levy,
    Schwefel,
}

impl BaseFn {
    /// Scale applied to the shifted vector before rotation.
    pub fn rate(self) -> f64 {
        match self {
            BaseFn::Rosenbrock => 2.048 / 100.0,
            BaseFn::Rastrigin => 5.12 / 100.0,
            BaseFn::Schwefel => 1000.0 / 100.0,
            _ => 1.0,
        }
    }

    /// Value on the rotated vector `z`; every base is 0 at `z = 0`.
    pub fn eval(self, z: &[f64]) -> f64 {
        match self {
            BaseFn::BentCigar => bent_cigar_fn(z),
            BaseFn::Zakharov => zakharov_fn(z),
            BaseFn::Rosenbrock => {
                let shifted: Vec<f64> = z.iter().map(|v| v + 1.0).collect();
                crate::problems::analytic::rosenbrock_fn(&shifted)
            }
            BaseFn::Rastrigin => rastrigin_fn(z),
            BaseFn::Levy => {
                let w: Vec<f64> = z.iter().map(|v| 1.0 + v / 4.0).collect();
                levy_w(&w)
            }
            BaseFn::Schwefel => schwefel_bounded(z),
        }
    }
}

fn schwefel_bounded(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let mut f = 0.0;
    for &zi in z {
        let v = zi + 420.968_746_227_503_6;
        if v > 500.0 {
            let m = 500.0 - v % 500.0;
            f -= m * m.abs().sqrt().sin();
            f += ((v - 500.0) / 100.0).powi(2) / n;
        } else if v < -500.0 {
            let m = -500.0 + v.abs() % 500.0;
            f -= m * m.abs().sqrt().sin();
            f += ((v + 500.0) / 100.0).powi(2) / n;
        } else {
            f -= v * v.abs().sqrt().sin();
        }
    }
    f + 418.982_887_272_433_9 * n
}

/// Shift vector, rotation matrix and optional shuffle for one function/dim.
#[derive(Clone, Debug, PartialEq)]
pub struct CecDataBundle {
    pub function_id: u32,
    pub dim: usize,
    pub shift: Vec<f64>,
    /// Row-major `dim x dim`.
    pub rotation: Vec<f64>,
    /// Zero-based permutation, when a shuffle file is present.
    pub shuffle: Option<Vec<usize>>,
}

impl CecDataBundle {
    pub fn shift_path(dir: &Path, id: u32) -> PathBuf {
        dir.join(format!("shift_data_{id}.txt"))
    }

    pub fn rotation_path(dir: &Path, id: u32, dim: usize) -> PathBuf {
        dir.join(format!("M_{id}_D{dim}.txt"))
    }

    pub fn shuffle_path(dir: &Path, id: u32, dim: usize) -> PathBuf {
        dir.join(format!("shuffle_data_{id}_D{dim}.txt"))
    }

    pub fn load(dir: &Path, function_id: u32, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::config("benchmark dimension must be positive"));
        }
        let shift_path = Self::shift_path(dir, function_id);
        let rows = read_rows(&shift_path, &format!("one row of at least {dim} reals"))?;
        let first = rows.first().ok_or_else(|| shape_error(&shift_path, dim, "file is empty"))?;
        if first.len() < dim {
            return Err(shape_error(
                &shift_path,
                dim,
                &format!("first row has {} values, expected at least {dim}", first.len()),
            ));
        }
        let shift = first[..dim].to_vec();

        let rot_path = Self::rotation_path(dir, function_id, dim);
        let rows = read_rows(&rot_path, &format!("{dim} rows of {dim} reals"))?;
        if rows.len() < dim {
            return Err(matrix_error(&rot_path, dim, &format!("found {} rows", rows.len())));
        }
        let mut rotation = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().take(dim).enumerate() {
            if row.len() != dim {
                return Err(matrix_error(
                    &rot_path,
                    dim,
                    &format!("row {} has {} values", i + 1, row.len()),
                ));
            }
            rotation.extend_from_slice(row);
        }

        let shuffle_path = Self::shuffle_path(dir, function_id, dim);
        let shuffle = if shuffle_path.exists() {
            Some(read_shuffle(&shuffle_path, dim)?)
        } else {
            None
        };

        Ok(CecDataBundle {
            function_id,
            dim,
            shift,
            rotation,
            shuffle,
        })
    }

    /// Writes the bundle in the documented format.
    pub fn write(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let shift_path = Self::shift_path(dir, self.function_id);
        fs::write(&shift_path, join_row(&self.shift) + "\n").map_err(|e| Error::io(&shift_path, e))?;
        let rot_path = Self::rotation_path(dir, self.function_id, self.dim);
        let body: String = self
            .rotation
            .chunks(self.dim)
            .map(|r| join_row(r) + "\n")
            .collect();
        fs::write(&rot_path, body).map_err(|e| Error::io(&rot_path, e))?;
        if let Some(s) = &self.shuffle {
            let p = Self::shuffle_path(dir, self.function_id, self.dim);
            let row: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
            fs::write(&p, row.join(" ") + "\n").map_err(|e| Error::io(&p, e))?;
        }
        Ok(())
    }
}

fn join_row(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:e}")).collect::<Vec<_>>().join(" ")
}

fn shape_error(path: &Path, dim: usize, what: &str) -> Error {
    Error::DataFormat {
        path: path.to_path_buf(),
        message: format!("{what}; expected one row of at least {dim} reals"),
    }
}

fn matrix_error(path: &Path, dim: usize, what: &str) -> Error {
    Error::DataFormat {
        path: path.to_path_buf(),
        message: format!("{what}; expected {dim} rows of {dim} reals"),
    }
}

fn read_rows(path: &Path, expected: &str) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path).map_err(|e| Error::DataFormat {
        path: path.to_path_buf(),
        message: format!("cannot read file ({e}); expected {expected}"),
    })?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>().map_err(|_| Error::DataFormat {
                        path: path.to_path_buf(),
                        message: format!("row {}: `{tok}` is not a real number; expected {expected}", i + 1),
                    })
                })
                .collect()
        })
        .collect()
}

fn read_shuffle(path: &Path, dim: usize) -> Result<Vec<usize>> {
    let rows = read_rows(path, &format!("a permutation of 1..={dim}"))?;
    let flat: Vec<f64> = rows.into_iter().flatten().collect();
    let bad = || Error::DataFormat {
        path: path.to_path_buf(),
        message: format!("expected a permutation of 1..={dim}"),
    };
    if flat.len() < dim {
        return Err(bad());
    }
    let mut perm = Vec::with_capacity(dim);
    let mut seen = vec![false; dim];
    for v in &flat[..dim] {
        let k = *v as usize;
        if v.fract() != 0.0 || k == 0 || k > dim || seen[k - 1] {
            return Err(bad());
        }
        seen[k - 1] = true;
        perm.push(k - 1);
    }
    Ok(perm)
}

/// `base(M * (rate * (x - shift))) + bias`.
pub struct ShiftedRotated {
    pub base: BaseFn,
    pub bias: f64,
    pub shift: Vec<f64>,
    pub rotation: Vec<f64>,
}

impl ShiftedRotated {
    pub fn transform(&self, x: &[f64]) -> Vec<f64> {
        let d = self.shift.len();
        let rate = self.base.rate();
        let y: Vec<f64> = x.iter().zip(&self.shift).map(|(a, o)| rate * (a - o)).collect();
        (0..d)
            .map(|i| {
                self.rotation[i * d..(i + 1) * d]
                    .iter()
                    .zip(&y)
                    .map(|(m, v)| m * v)
                    .sum()
            })
            .collect()
    }
}

impl Model for ShiftedRotated {
    fn objective(&self, x: &[f64]) -> f64 {
        self.base.eval(&self.transform(x)) + self.bias
    }
}

/// Builds a problem from a bundle already in memory.
pub fn compose(suite: Suite, bundle: CecDataBundle) -> Result<Problem> {
    let (base, bias) = suite.resolve(bundle.function_id)?;
    let space = SearchSpace::uniform(bundle.dim, -100.0, 100.0)?;
    let model = ShiftedRotated {
        base,
        bias,
        shift: bundle.shift,
        rotation: bundle.rotation,
    };
    Ok(Problem::new(
        format!("{}:{}:{}", suite.name(), bundle.function_id, bundle.dim),
        space,
        Arc::new(model),
    ))
}

/// Loads the bundle for `function_id`/`dim` from `dir` and composes the
/// shifted, rotated problem.
pub fn load_cec_bundle(dir: &Path, suite: Suite, function_id: u32, dim: usize) -> Result<Problem> {
    suite.resolve(function_id)?;
    let bundle = CecDataBundle::load(dir, function_id, dim)?;
    compose(suite, bundle)
}
