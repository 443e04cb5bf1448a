use std::path::PathBuf;

use clap::{Args, ValueEnum};
use saft::mra::{chirp, phi_family, ScalingFunction};
use saft::transform::{forward, inverse};
use saft::{Complex64, SaftParams, SampledFunction, UniformGrid};

use super::{linspace, parse_choice, spanning};
use crate::config::{config_error, RunConfig};
use crate::output::{num, read_sampled, write_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Signal {
    /// `e^{−αx²}`
    Gaussian,
    /// `e^{−αx²}` times the transform's own chirp `e^{−(i/2B)(Ax² + 2px)}`
    ChirpedGaussian,
    /// The scaling function `e^{−(i/2B)(Ax² + 2px)}·sinc(x)` under a Gaussian taper of width `--width`
    ChirpedSinc,
    /// `χ_[0,1)`
    Indicator,
    Zero,
}

impl Signal {
    pub fn eval(self, params: &SaftParams, alpha: f64, width: f64, x: f64) -> Complex64 {
        match self {
            Signal::Gaussian => Complex64::new((-alpha * x * x).exp(), 0.0),
            Signal::ChirpedGaussian => chirp(params, x) * (-alpha * x * x).exp(),
            Signal::ChirpedSinc => {
                let taper = (-0.5 * (x / width).powi(2)).exp();
                phi_family(params, &ScalingFunction::sinc(), 0, 0, x) * taper
            }
            Signal::Indicator => Complex64::new(if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 }, 0.0),
            Signal::Zero => Complex64::default(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TransformArgs {
    /// Built-in input signal (default gaussian).
    #[arg(long, value_enum)]
    pub signal: Option<Signal>,
    /// Two-column (x,value) or three-column (x,re,im) CSV input instead of a built-in signal.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Apply the inverse transform to the input.
    #[arg(long)]
    pub inverse: bool,
    /// Gaussian exponent α (default 0.5).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Taper width for chirped_sinc (default 2).
    #[arg(long)]
    pub width: Option<f64>,
    /// Lower end of the input grid (default −8).
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<f64>,
    /// Upper end of the input grid (default 8).
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<f64>,
    /// Input grid spacing (default 1/64).
    #[arg(long)]
    pub step: Option<f64>,
    /// Lower end of the output grid (default −8).
    #[arg(long, allow_hyphen_values = true)]
    pub out_lo: Option<f64>,
    /// Upper end of the output grid (default 8).
    #[arg(long, allow_hyphen_values = true)]
    pub out_hi: Option<f64>,
    /// Number of output points (default 257).
    #[arg(long)]
    pub out_count: Option<usize>,
    /// Output CSV path (default stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

pub fn run(cfg: &RunConfig, args: &TransformArgs) -> anyhow::Result<()> {
    let params = cfg.params;
    let inverse_mode = args.inverse || cfg.pick_opt::<bool>(None, "inverse")?.unwrap_or(false);
    let input = cfg.pick_opt(args.input.clone(), "input")?;
    let f = match input {
        Some(path) => read_sampled(&path)?,
        None => {
            let signal = match args.signal {
                Some(s) => s,
                None => match cfg.pick_opt::<String>(None, "signal")? {
                    Some(raw) => parse_choice(&raw, "signal")?,
                    None => Signal::Gaussian,
                },
            };
            let alpha = cfg.pick(args.alpha, "alpha", 0.5)?;
            let width = cfg.pick(args.width, "width", 2.0)?;
            if !(alpha > 0.0) || !(width > 0.0) {
                return Err(config_error("alpha and width must be positive"));
            }
            let grid = spanning(
                cfg.pick(args.lo, "lo", -8.0)?,
                cfg.pick(args.hi, "hi", 8.0)?,
                cfg.pick(args.step, "step", 1.0 / 64.0)?,
            )?;
            SampledFunction::from_fn(grid, |x| signal.eval(&params, alpha, width, x))?
        }
    };
    let out_grid: UniformGrid = linspace(
        cfg.pick(args.out_lo, "out_lo", -8.0)?,
        cfg.pick(args.out_hi, "out_hi", 8.0)?,
        cfg.pick(args.out_count, "out_count", 257)?,
    )?;
    let (result, axis) = if inverse_mode {
        (inverse(&params, &f, &out_grid)?, "x")
    } else {
        (forward(&params, &f, &out_grid)?, "zeta")
    };
    let output = cfg.pick_opt(args.output.clone(), "output")?;
    write_table(
        output.as_ref(),
        &[axis, "re", "im"],
        result.iter().map(|(t, v)| vec![num(t), num(v.re), num(v.im)]),
    )
}
