use std::path::PathBuf;

use clap::{Args, ValueEnum};
use saft::mra::{chirp, phi_family, ScalingFunction};
use saft::sampling::{reconstruct, sinc, BandlimitSpec, SampleSet, DEFAULT_WINDOW};
use saft::{Complex64, SaftParams};

use super::{linspace, parse_choice};
use crate::config::{config_error, RunConfig};
use crate::output::{num, write_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleSignal {
    /// `φ_{S,0,0}(x) = e^{−(i/2B)(Ax² + 2px)}·sinc(x)`
    Scaling,
    /// `e^{−(i/2B)(Ax² + 2px)}·sinc(x − 1/2)`, whose samples decay slowly
    Shifted,
    /// A fixed combination of `φ_{S,0,n}`, `|n| ≤ 5`
    Span,
}

impl SampleSignal {
    pub fn eval(self, params: &SaftParams, x: f64) -> Complex64 {
        let phi = ScalingFunction::sinc();
        match self {
            SampleSignal::Scaling => phi_family(params, &phi, 0, 0, x),
            SampleSignal::Shifted => chirp(params, x) * sinc(x - 0.5),
            SampleSignal::Span => (-5i64..=5)
                .map(|n| {
                    let c = Complex64::new((n as f64).cos(), 0.5 * (2.0 * n as f64).sin());
                    c * phi_family(params, &phi, 0, n, x)
                })
                .sum(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// Signal to sample and reconstruct (default scaling).
    #[arg(long, value_enum)]
    pub signal: Option<SampleSignal>,
    /// Bandwidth level k: Ω = 2ᵏBπ, sampling period 2⁻ᵏ (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub level: Option<i32>,
    /// Truncation window N, samples n = −N..=N (default 64).
    #[arg(long)]
    pub window: Option<i64>,
    /// Lower end of the evaluation grid (default −4).
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<f64>,
    /// Upper end of the evaluation grid (default 4).
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<f64>,
    /// Number of evaluation points (default 801).
    #[arg(long)]
    pub count: Option<usize>,
    /// Output CSV path (default stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

pub fn run(cfg: &RunConfig, args: &SampleArgs) -> anyhow::Result<()> {
    let params = cfg.params;
    let signal = match args.signal {
        Some(s) => s,
        None => match cfg.pick_opt::<String>(None, "signal")? {
            Some(raw) => parse_choice(&raw, "signal")?,
            None => SampleSignal::Scaling,
        },
    };
    let level = cfg.pick(args.level, "level", 0)?;
    let window = cfg.pick(args.window, "window", DEFAULT_WINDOW)?;
    if window < 1 {
        return Err(config_error(format!("window must be at least 1, got {window}")));
    }
    let grid = linspace(
        cfg.pick(args.lo, "lo", -4.0)?,
        cfg.pick(args.hi, "hi", 4.0)?,
        cfg.pick(args.count, "count", 801)?,
    )?;
    let spec = BandlimitSpec::dyadic(&params, level)?;
    let samples = SampleSet::from_fn(|x| signal.eval(&params, x), spec.period(), window)?;
    let mut rows = Vec::with_capacity(grid.count());
    for x in grid.points() {
        let got = reconstruct(&params, &samples, &spec, x)?;
        let exact = signal.eval(&params, x);
        rows.push(vec![
            num(x),
            num(got.re),
            num(got.im),
            num(exact.re),
            num(exact.im),
            num((got - exact).norm()),
        ]);
    }
    let output = cfg.pick_opt(args.output.clone(), "output")?;
    write_table(output.as_ref(), &["x", "re", "im", "exact_re", "exact_im", "abs_err"], rows)
}
