pub mod approx;
pub mod check;
pub mod sample;
pub mod transform;
pub mod wavelet;

use saft::UniformGrid;

use crate::config::config_error;

/// Grid of `count` points from `lo` to `hi`, with configuration errors mapped
/// to exit status 2.
pub fn linspace(lo: f64, hi: f64, count: usize) -> anyhow::Result<UniformGrid> {
    if !(hi > lo) {
        return Err(config_error(format!("grid upper end {hi} must exceed lower end {lo}")));
    }
    UniformGrid::linspace(lo, hi, count).map_err(|e| config_error(e.to_string()))
}

/// Grid from `lo` to `hi` with spacing close to `step`.
pub fn spanning(lo: f64, hi: f64, step: f64) -> anyhow::Result<UniformGrid> {
    UniformGrid::spanning(lo, hi, step).map_err(|e| config_error(e.to_string()))
}

/// Parses a `clap::ValueEnum` from a config-file string.
pub fn parse_choice<T: clap::ValueEnum>(raw: &str, what: &str) -> anyhow::Result<T> {
    T::from_str(raw, true).map_err(|_| config_error(format!("unknown {what} '{raw}'")))
}
