use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Context;
use clap::Args;
use saft::approx::{BasisKind, CollocationProblem, DEFAULT_CONDITION_BOUND, DEFAULT_ERROR_POINTS};

use crate::config::{config_error, RunConfig};
use crate::output::{num, read_sampled, write_table};

type Target = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Args)]
pub struct ApproxArgs {
    /// Target function: x2, x3, sin, exp, or a CSV file of (x, value) samples on [0, 1] (default x2).
    #[arg(long)]
    pub target: Option<String>,
    /// Highest level J; rows are written for J = 1..=jmax (default 6).
    #[arg(long)]
    pub jmax: Option<u32>,
    /// Points in the uniform error grid on [0, 1] (default 2001).
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Largest accepted 1-norm condition number of the collocation matrix (default 1e12).
    #[arg(long)]
    pub condition_bound: Option<f64>,
    /// Also write the coefficients a_σ of every solve to this CSV.
    #[arg(long, value_name = "PATH")]
    pub coeffs: Option<PathBuf>,
    /// Output CSV path (default stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn linear_interpolant(path: &Path) -> anyhow::Result<Target> {
    let f = read_sampled(path)?;
    let (x0, h, n) = (f.grid().start(), f.grid().step(), f.grid().count());
    let ys: Vec<f64> = f.values().iter().map(|v| v.re).collect();
    Ok(Arc::new(move |x| {
        let t = ((x - x0) / h).clamp(0.0, (n - 1) as f64);
        let j = (t.floor() as usize).min(n - 2);
        let w = t - j as f64;
        ys[j] * (1.0 - w) + ys[j + 1] * w
    }))
}

pub fn target(name: &str) -> anyhow::Result<Target> {
    Ok(match name {
        "x2" => Arc::new(|x| x * x),
        "x3" => Arc::new(|x| x * x * x),
        "sin" => Arc::new(|x| (2.0 * PI * x).sin()),
        "exp" => Arc::new(f64::exp),
        path if Path::new(path).is_file() => linear_interpolant(Path::new(path))?,
        other => return Err(config_error(format!("unknown target '{other}' (expected x2, x3, sin, exp or a CSV path)"))),
    })
}

pub fn run(cfg: &RunConfig, args: &ApproxArgs) -> anyhow::Result<()> {
    let name = cfg.pick(args.target.clone(), "target", "x2".to_string())?;
    let f = target(&name)?;
    let jmax = cfg.pick(args.jmax, "jmax", 6)?;
    if !(1..=12).contains(&jmax) {
        return Err(config_error(format!("jmax must be in 1..=12, got {jmax}")));
    }
    let grid_points = cfg.pick(args.grid_points, "grid_points", DEFAULT_ERROR_POINTS)?;
    let bound = cfg.pick(args.condition_bound, "condition_bound", DEFAULT_CONDITION_BOUND)?;
    let mut rows = Vec::new();
    let mut coeff_rows = Vec::new();
    for level in 1..=jmax {
        let mut errors = [0.0; 2];
        for (slot, basis) in [BasisKind::SpecialAffine, BasisKind::ClassicalHaar].into_iter().enumerate() {
            let g = Arc::clone(&f);
            let problem = CollocationProblem::new(level, cfg.params, basis, move |x| g(x))?.with_condition_bound(bound);
            let result = problem
                .solve()
                .with_context(|| format!("level J={level}, basis {}", basis.name()))?;
            errors[slot] = result.linf_error(grid_points)?;
            for (sigma, a) in result.coefficients.iter().enumerate() {
                coeff_rows.push(vec![level.to_string(), basis.name().to_string(), (sigma + 1).to_string(), num(*a)]);
            }
        }
        rows.push(vec![
            level.to_string(),
            num(errors[0]),
            num(errors[1]),
            num(errors[0] / errors[1]),
        ]);
    }
    if let Some(path) = cfg.pick_opt(args.coeffs.clone(), "coeffs")? {
        write_table(Some(&path), &["J", "basis", "sigma", "coefficient"], coeff_rows)?;
    }
    let output = cfg.pick_opt(args.output.clone(), "output")?;
    write_table(
        output.as_ref(),
        &["J", "special_affine_linf", "classical_haar_linf", "ratio"],
        rows,
    )
}
