//! CSV/JSON output of an experiment.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::config::ExperimentConfig;
use crate::harness::rank::RankTable;
use crate::harness::{ExperimentReport, RunRecord};
use crate::search::CurvePoint;

/// One line of `summary.csv`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: String,
    pub optimizer: String,
    pub mean: f64,
    pub variance: f64,
    pub best: f64,
    pub worst: f64,
    pub rank_m: usize,
    pub rank_v: usize,
    /// Square root of the variance.
    pub std: f64,
}

#[derive(Serialize)]
struct AverageRankRow<'a> {
    optimizer: &'a str,
    avg_rank_m: f64,
    avg_rank_v: f64,
}

#[derive(Serialize)]
struct Metadata {
    variance: &'static str,
    std: &'static str,
    seed: &'static str,
    ranks: &'static str,
    version: &'static str,
}

/// Keeps letters, digits, `-` and `.`; everything else becomes `-`.
pub fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '-' })
        .collect()
}

pub fn curve_file_name(problem: &str, optimizer: &str, run_index: usize) -> String {
    format!("{}_{}_{}.csv", sanitize(problem), sanitize(optimizer), run_index)
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Serde {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

fn write_rows<T: Serialize>(path: &Path, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv_writer(path)?;
    for row in rows {
        w.serialize(row).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Serde {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn write_curve(path: &Path, curve: &[CurvePoint]) -> Result<()> {
    write_rows(path, curve)
}

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> Result<()> {
    write_rows(path, rows)
}

pub fn write_average_ranks(path: &Path, ranks: &RankTable) -> Result<()> {
    let m = ranks.average_rank_m();
    let v = ranks.average_rank_v();
    write_rows(
        path,
        ranks.optimizers.iter().enumerate().map(|(o, name)| AverageRankRow {
            optimizer: name,
            avg_rank_m: m[o],
            avg_rank_v: v[o],
        }),
    )
}

pub fn read_summary(path: &Path) -> Result<Vec<SummaryRow>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    csv::Reader::from_reader(file)
        .deserialize()
        .map(|row| {
            row.map_err(|e| Error::DataFormat {
                path: path.to_path_buf(),
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn read_curve(path: &Path) -> Result<Vec<CurvePoint>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    csv::Reader::from_reader(file)
        .deserialize()
        .map(|row| {
            row.map_err(|e| Error::DataFormat {
                path: path.to_path_buf(),
                message: e.to_string(),
            })
        })
        .collect()
}

/// Writes `summary.csv`, `ranks.csv`, `config.json`, `metadata.json` and one
/// `curves/<problem>_<optimizer>_<run>.csv` per run. Returns the written
/// paths.
pub fn emit_outputs(report: &ExperimentReport, cfg: &ExperimentConfig, dir: &Path) -> Result<Vec<PathBuf>> {
    let curves = dir.join("curves");
    fs::create_dir_all(&curves).map_err(|e| Error::io(&curves, e))?;
    let mut written = Vec::new();

    for RunRecord {
        problem,
        optimizer,
        run_index,
        result,
        ..
    } in &report.records
    {
        let path = curves.join(curve_file_name(problem, optimizer, *run_index));
        write_curve(&path, &result.curve)?;
        written.push(path);
    }

    let summary = dir.join("summary.csv");
    write_summary(&summary, &report.summary)?;
    let ranks = dir.join("ranks.csv");
    write_average_ranks(&ranks, &report.ranks)?;
    let config = dir.join("config.json");
    write_json(&config, cfg)?;
    let metadata = dir.join("metadata.json");
    write_json(
        &metadata,
        &Metadata {
            variance: "population variance of the final best values (divides by the number of runs)",
            std: "square root of variance",
            seed: "base_seed + run_index",
            ranks: "ascending; ties share the lowest rank",
            version: env!("CARGO_PKG_VERSION"),
        },
    )?;
    written.extend([summary, ranks, config, metadata]);
    Ok(written)
}
