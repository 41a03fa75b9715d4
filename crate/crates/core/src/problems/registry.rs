use std::path::Path;

use crate::error::{Error, Result};
use crate::problems::analytic::AnalyticFn;
use crate::problems::cec::{load_cec_bundle, Suite};
use crate::problems::{engineering, Problem};

const DEFAULT_ANALYTIC_DIM: usize = 10;

/// Names accepted by [`by_name`], in display form.
pub fn problem_names() -> Vec<String> {
    let mut names: Vec<String> = ["pvd", "pvd-discrete", "ttd", "wbd"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(AnalyticFn::ALL.iter().map(|f| format!("{}[:dim]", f.name())));
    names.push("cec2017:<id>:<dim>".into());
    names.push("cec2022:<id>:<dim>".into());
    names
}

/// Resolves a registry name such as `pvd`, `sphere:30` or `cec2017:1:10`.
///
/// Benchmark-suite problems read their data from `cec_dir`.
pub fn by_name(name: &str, cec_dir: &Path) -> Result<Problem> {
    match name {
        "pvd" => return Ok(engineering::pressure_vessel()),
        "pvd-discrete" => return Ok(engineering::pressure_vessel_discrete()),
        "ttd" => return Ok(engineering::three_bar_truss()),
        "wbd" => return Ok(engineering::welded_beam()),
        _ => {}
    }
    let parts: Vec<&str> = name.split(':').collect();
    let unknown = || Error::UnknownProblem(name.to_string());
    let parse_dim = |s: &str| -> Result<usize> {
        match s.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(Error::config(format!("invalid dimension `{s}` in problem `{name}`"))),
        }
    };

    if let Some(suite) = Suite::from_name(parts[0]) {
        let [_, id, dim] = parts[..] else {
            return Err(Error::config(format!(
                "benchmark problems are written `{}:<id>:<dim>`, got `{name}`",
                parts[0]
            )));
        };
        let id = id
            .trim_start_matches(['F', 'f'])
            .parse::<u32>()
            .map_err(|_| Error::config(format!("invalid function id in `{name}`")))?;
        return load_cec_bundle(cec_dir, suite, id, parse_dim(dim)?);
    }

    let f = AnalyticFn::from_name(parts[0]).ok_or_else(unknown)?;
    let dim = match parts[..] {
        [_] => DEFAULT_ANALYTIC_DIM,
        [_, d] => parse_dim(d)?,
        _ => return Err(unknown()),
    };
    Ok(f.problem(dim))
}
