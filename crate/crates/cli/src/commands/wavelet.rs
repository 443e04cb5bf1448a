use std::path::PathBuf;

use clap::{Args, ValueEnum};
use saft::wavelets::{haar_psi, WaveletFamily, SHANNON_SYNTHESIS_WINDOW};

use super::{linspace, parse_choice};
use crate::config::{config_error, RunConfig};
use crate::output::{num, write_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Shannon,
    Haar,
}

#[derive(Debug, Clone, Args)]
pub struct WaveletArgs {
    /// Wavelet family (default haar).
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// Coefficient window |n| ≤ N for the Shannon family (default 512).
    #[arg(long)]
    pub window: Option<i64>,
    /// Emit the closed-form Haar wavelet instead of the filter synthesis.
    #[arg(long)]
    pub closed_form: bool,
    /// Lower end of the grid (default −3 for shannon, −0.5 for haar).
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<f64>,
    /// Upper end of the grid (default 3 for shannon, 1.5 for haar).
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<f64>,
    /// Number of points (default 1201 for shannon, 801 for haar).
    #[arg(long)]
    pub count: Option<usize>,
    /// Output CSV path (default stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

pub fn run(cfg: &RunConfig, args: &WaveletArgs) -> anyhow::Result<()> {
    let params = cfg.params;
    let kind = match args.kind {
        Some(k) => k,
        None => match cfg.pick_opt::<String>(None, "kind")? {
            Some(raw) => parse_choice(&raw, "wavelet kind")?,
            None => Kind::Haar,
        },
    };
    let (lo, hi, count) = match kind {
        Kind::Shannon => (-3.0, 3.0, 1201),
        Kind::Haar => (-0.5, 1.5, 801),
    };
    let grid = linspace(
        cfg.pick(args.lo, "lo", lo)?,
        cfg.pick(args.hi, "hi", hi)?,
        cfg.pick(args.count, "count", count)?,
    )?;
    let closed_form = args.closed_form || cfg.pick_opt::<bool>(None, "closed_form")?.unwrap_or(false);
    let values = match kind {
        Kind::Haar if closed_form => grid.points().map(|x| haar_psi(&params, x)).collect(),
        Kind::Haar => WaveletFamily::haar(&params).psi_on(grid.points()),
        Kind::Shannon => {
            let window = cfg.pick(args.window, "window", SHANNON_SYNTHESIS_WINDOW)?;
            if window < 1 {
                return Err(config_error(format!("window must be at least 1, got {window}")));
            }
            WaveletFamily::shannon(&params, window).psi_on(grid.points())
        }
    };
    let output = cfg.pick_opt(args.output.clone(), "output")?;
    write_table(
        output.as_ref(),
        &["x", "re", "im", "abs"],
        grid.points()
            .zip(values)
            .map(|(x, v)| vec![num(x), num(v.re), num(v.im), num(v.norm())]),
    )
}
