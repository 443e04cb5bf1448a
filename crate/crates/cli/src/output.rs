//! CSV reading and writing.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use saft::{Complex64, SampledFunction, UniformGrid};

use crate::config::config_error;

/// Formats a number with 17 significant digits in scientific notation.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn sink(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

/// Writes a header and numeric rows.
pub fn write_table<I>(path: Option<&PathBuf>, header: &[&str], rows: I) -> anyhow::Result<()>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(sink(path.map(PathBuf::as_path))?);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a uniformly sampled function from a CSV of `x,value` or `x,re,im`
/// rows. A leading non-numeric row is treated as a header.
pub fn read_sampled(path: &Path) -> anyhow::Result<SampledFunction> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
    let mut xs = Vec::new();
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let fields: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let fields = match fields {
            Ok(f) => f,
            Err(_) if i == 0 => continue,
            Err(e) => bail!(config_error(format!("{} row {}: {e}", path.display(), i + 1))),
        };
        let v = match fields.as_slice() {
            [x, re] => (*x, Complex64::new(*re, 0.0)),
            [x, re, im] => (*x, Complex64::new(*re, *im)),
            _ => bail!(config_error(format!("{} row {}: expected 2 or 3 columns", path.display(), i + 1))),
        };
        xs.push(v.0);
        values.push(v.1);
    }
    if xs.len() < 2 {
        bail!(config_error(format!("{}: need at least two samples", path.display())));
    }
    let step = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    let uniform = xs
        .iter()
        .enumerate()
        .all(|(j, &x)| (x - (xs[0] + j as f64 * step)).abs() <= 1e-9 * step.abs().max(1.0));
    if !uniform {
        bail!(config_error(format!("{}: x column is not uniformly spaced", path.display())));
    }
    let grid = UniformGrid::new(xs[0], step, xs.len()).map_err(|e| config_error(e.to_string()))?;
    SampledFunction::new(grid, values).map_err(|e| config_error(e.to_string()))
}
