//! Invariant suites reported as JSON.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use saft::approx::{collocation_points, BasisKind, CollocationProblem};
use saft::mra::{
    chirp, cross_defect_of, gram_matrix, highpass_symbol_check, identity_defect, lowpass_from_phi,
    periodization_defect, phi_family, qmf_defect_of, refinement_residual, ScalingFunction, Symbol, SymbolKind,
};
use saft::sampling::{reconstruct, sinc, BandlimitSpec, SampleSet};
use saft::transform::{chirp_dilate_fn, energy, forward, inverse, relative_l2_error};
use saft::wavelets::{haar_filters, shannon_filters, WaveletFamily, SHANNON_SYMBOL_WINDOW, SHANNON_SYNTHESIS_WINDOW};
use saft::{Complex64, SaftParams, SampledFunction, UniformGrid};

use crate::config::RunConfig;
use crate::output::sink;

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Replace every suite tolerance with this value.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output JSON path (default stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub defect: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
struct Matrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    p: f64,
    q: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    params: Matrix,
    invariants: Vec<Entry>,
    all_pass: bool,
}

type Measured = Vec<(&'static str, f64, f64)>;
type Suite = fn(&SaftParams) -> saft::Result<Measured>;

const SUITES: &[(&str, Suite)] = &[
    ("fourier_reduction", fourier_reduction),
    ("round_trip", round_trip),
    ("dilation", dilation),
    ("inverse_kernel", inverse_kernel),
    ("sampling", sampling),
    ("orthonormality", orthonormality),
    ("filters", filters),
    ("refinement", refinement),
    ("wavelet_orthogonality", wavelet_orthogonality),
    ("approximation", approximation),
];

fn max_norm_diff(a: &[Complex64], b: impl IntoIterator<Item = Complex64>) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max)
}

fn grid(lo: f64, hi: f64, step: f64) -> saft::Result<UniformGrid> {
    UniformGrid::spanning(lo, hi, step)
}

fn fourier_reduction(_: &SaftParams) -> saft::Result<Measured> {
    let params = SaftParams::fourier();
    let f = SampledFunction::from_real_fn(grid(-8.0, 8.0, 1.0 / 64.0)?, |x| (-x * x / 2.0).exp())?;
    let zeta = UniformGrid::linspace(-8.0, 8.0, 257)?;
    let spectrum = forward(&params, &f, &zeta)?;
    let want = zeta.points().map(|z| Complex64::from_polar((-z * z / 2.0).exp(), -PI / 4.0));
    Ok(vec![("fourier_reduction", max_norm_diff(spectrum.values(), want), 1e-6)])
}

/// A ζ grid covering the transform of `e^{−αx²}` down to ~1e−12 of its peak.
fn spectral_grid(params: &SaftParams, alpha: Complex64, x_max: f64) -> saft::Result<UniformGrid> {
    let b = params.b;
    let quad = alpha - Complex64::new(0.0, params.a / (2.0 * b));
    let half = (112.0 * b * b * quad.norm_sqr() / quad.re).sqrt();
    let chirp_rate = (1.0 / (2.0 * quad)).im.abs() * half / (b * b);
    let step = (PI / (2.0 * (chirp_rate + x_max / b))).min(0.05);
    grid(params.p - half, params.p + half, step)
}

fn round_trip(params: &SaftParams) -> saft::Result<Measured> {
    let xs = grid(-8.0, 8.0, 1.0 / 16.0)?;
    let mut out = Vec::new();
    for (label, alpha) in [("gaussian", Complex64::new(0.5, 0.0)), ("chirped_gaussian", Complex64::new(0.5, -0.25))] {
        let f = SampledFunction::from_fn(xs, |x| (-alpha * x * x).exp())?;
        let spectrum = forward(params, &f, &spectral_grid(params, alpha, 8.0)?)?;
        let back = inverse(params, &spectrum, &xs)?;
        let (ef, es) = (energy(&f), energy(&spectrum));
        let (rt, pv) = match label {
            "gaussian" => ("round_trip_gaussian", "parseval_gaussian"),
            _ => ("round_trip_chirped_gaussian", "parseval_chirped_gaussian"),
        };
        out.push((rt, relative_l2_error(&back, &f)?, 1e-6));
        out.push((pv, (ef - es).abs() / ef, 1e-5));
    }
    Ok(out)
}

fn dilation(params: &SaftParams) -> saft::Result<Measured> {
    let xs = grid(-20.0, 20.0, 1.0 / 32.0)?;
    let zeta = UniformGrid::linspace(-8.0, 8.0, 257)?;
    let f = |x: f64| Complex64::new((-x * x / 2.0).exp(), 0.0);
    let (mut first, mut second) = (0.0f64, 0.0f64);
    for a in [0.5, 2.0, 3.0] {
        let scaled = zeta.scaled(1.0 / a)?;
        let factor: Vec<Complex64> = zeta.points().map(|z| params.dilation_factor(a, z)).collect();
        let times_factor = |s: SampledFunction| s.values().iter().zip(&factor).map(|(v, c)| v * c).collect::<Vec<_>>();

        let lhs = forward(params, &SampledFunction::from_fn(xs, |x| f(a * x))?, &zeta)?;
        let rhs = forward(params, &SampledFunction::from_fn(xs, |x| params.dilation_chirp(a, x) * f(x))?, &scaled)?;
        first = first.max(max_norm_diff(lhs.values(), times_factor(rhs)));

        let lhs = forward(params, &chirp_dilate_fn(params, f, &xs, a)?, &zeta)?;
        let rhs = forward(params, &SampledFunction::from_fn(xs, f)?, &scaled)?;
        second = second.max(max_norm_diff(lhs.values(), times_factor(rhs)));
    }
    Ok(vec![("dilation_identity_first", first, 1e-5), ("dilation_identity_second", second, 1e-5)])
}

fn inverse_kernel(params: &SaftParams) -> saft::Result<Measured> {
    let pre = params.prefactor();
    let mut worst = 0.0f64;
    for i in 0..40 {
        for j in 0..25 {
            let x = -5.0 + 10.0 * (i as f64 + 0.37) / 40.0;
            let z = -5.0 + 10.0 * (j as f64 + 0.61) / 25.0;
            worst = worst.max((params.inverse_kernel(z, x) - (pre * params.kernel(x, z)).conj()).norm());
        }
    }
    Ok(vec![("inverse_kernel_identity", worst, 1e-12)])
}

fn sampling(params: &SaftParams) -> saft::Result<Measured> {
    let phi = ScalingFunction::sinc();
    let spec = BandlimitSpec::dyadic(params, 0)?;
    let xs = UniformGrid::linspace(-4.0, 4.0, 801)?;
    let max_error = |f: &dyn Fn(f64) -> Complex64, window: i64| -> saft::Result<f64> {
        let samples = SampleSet::from_fn(f, spec.period(), window)?;
        let mut worst = 0.0f64;
        for x in xs.points() {
            worst = worst.max((reconstruct(params, &samples, &spec, x)? - f(x)).norm());
        }
        Ok(worst)
    };
    let scaling = |x: f64| phi_family(params, &phi, 0, 0, x);
    let span = |x: f64| -> Complex64 {
        (-5i64..=5)
            .map(|n| Complex64::new((n as f64).cos(), 0.5 * (2.0 * n as f64).sin()) * phi_family(params, &phi, 0, n, x))
            .sum()
    };
    let shifted = |x: f64| chirp(params, x) * sinc(x - 0.5);
    let full = SampleSet::from_fn(shifted, spec.period(), 128)?;
    let mut growth = 0.0f64;
    for x in [0.3, 1.7, -2.2] {
        let e64 = (reconstruct(params, &full.truncated(64)?, &spec, x)? - shifted(x)).norm();
        let e128 = (reconstruct(params, &full, &spec, x)? - shifted(x)).norm();
        growth = growth.max(e128 / e64);
    }
    Ok(vec![
        ("sampling_scaling_exact", max_error(&scaling, 64)?, 1e-12),
        ("sampling_span_exact", max_error(&span, 64)?, 1e-10),
        ("sampling_truncation_monotone", growth, 1.1),
    ])
}

fn orthonormality(params: &SaftParams) -> saft::Result<Measured> {
    let zetas = (0..64).map(|j| (j as f64 + 0.5) * 2.0 * PI / 64.0);
    let mut out = Vec::new();
    for (phi, terms, names) in [
        (ScalingFunction::sinc(), 4, ("periodization_sinc", "gram_sinc")),
        (ScalingFunction::unit_box(), 10_000, ("periodization_box", "gram_box")),
    ] {
        let worst = zetas.clone().map(|z| periodization_defect(&phi, z, terms).abs()).fold(0.0, f64::max);
        let gram = gram_matrix(params, &phi, -2, 2, &phi.default_rule());
        out.push((names.0, worst, 2e-4));
        out.push((names.1, identity_defect(&gram), 2e-3));
    }
    Ok(out)
}

fn filters(params: &SaftParams) -> saft::Result<Measured> {
    let from_phi = lowpass_from_phi(params, &ScalingFunction::sinc(), -8, 8);
    let (closed, _) = shannon_filters(params, 8);

    let zetas: Vec<f64> = (0..64).map(|j| (j as f64 + 0.5) * 2.0 * PI / 64.0).collect();
    let (h, d) = haar_filters(params);
    let s0 = Symbol::new(params, &h, SymbolKind::Lowpass);
    let s1 = Symbol::new(params, &d, SymbolKind::Highpass);
    let mut qmf_haar = 0.0f64;
    let mut cross_haar = 0.0f64;
    let mut highpass_haar = 0.0f64;
    for &z in &zetas {
        qmf_haar = qmf_haar.max(qmf_defect_of(&s0, z).abs());
        cross_haar = cross_haar.max(cross_defect_of(&s0, &s1, z).norm());
        highpass_haar = highpass_haar.max(highpass_symbol_check(params, &h, &d, z).norm());
    }

    let shannon = WaveletFamily::shannon(params, SHANNON_SYMBOL_WINDOW);
    let t0 = Symbol::new(params, &shannon.h, SymbolKind::Lowpass);
    let t1 = Symbol::new(params, &shannon.d, SymbolKind::Highpass);
    let clear = |z: &&f64| ((**z / 2.0).rem_euclid(PI) - PI / 2.0).abs() >= 0.1;
    let (qmf_shannon, cross_shannon) = zetas
        .par_iter()
        .filter(clear)
        .map(|&z| (qmf_defect_of(&t0, z).abs(), cross_defect_of(&t0, &t1, z).norm()))
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));

    Ok(vec![
        ("lowpass_sinc", from_phi.max_deviation(&closed), 3e-3),
        ("qmf_haar", qmf_haar, 1e-12),
        ("cross_haar", cross_haar, 1e-12),
        ("highpass_haar", highpass_haar, 1e-12),
        ("qmf_shannon", qmf_shannon, 1e-2),
        ("cross_shannon", cross_shannon, 2e-2),
    ])
}

fn refinement(params: &SaftParams) -> saft::Result<Measured> {
    let (h, _) = haar_filters(params);
    let phi = ScalingFunction::unit_box();
    let worst = UniformGrid::linspace(-1.0, 2.0, 1024)?
        .points()
        .map(|x| refinement_residual(params, &phi, &h, x).norm())
        .fold(0.0, f64::max);
    Ok(vec![("refinement_haar", worst, 1e-10)])
}

fn wavelet_orthogonality(params: &SaftParams) -> saft::Result<Measured> {
    let mut out = Vec::new();
    for (family, name, tol) in [
        (WaveletFamily::haar(params), "orthogonality_haar", 1e-10),
        (WaveletFamily::shannon(params, SHANNON_SYNTHESIS_WINDOW), "orthogonality_shannon", 5e-3),
    ] {
        let psi = family.synthesis();
        let phi = &family.phi;
        let ip = phi.default_rule().inner(|x| phi_family(params, phi, 0, 0, x), |x| psi.eval(x));
        out.push((name, ip.norm(), tol));
    }
    Ok(out)
}

fn approximation(params: &SaftParams) -> saft::Result<Measured> {
    let mut worst = 0.0f64;
    for basis in [BasisKind::SpecialAffine, BasisKind::ClassicalHaar] {
        for level in 1..=6 {
            let r = CollocationProblem::new(level, *params, basis, |x| x * x)?.solve()?;
            for s in collocation_points(r.problem().m()) {
                worst = worst.max((r.reconstruct(s) - s * s).abs());
            }
        }
    }
    Ok(vec![("approx_collocation_interpolation", worst, 1e-10)])
}

pub fn report(params: &SaftParams, tol: Option<f64>) -> Report {
    let results: Vec<Vec<Entry>> = SUITES
        .par_iter()
        .map(|(suite, run)| match run(params) {
            Ok(measured) => measured
                .into_iter()
                .map(|(name, defect, default_tol)| {
                    let tolerance = tol.unwrap_or(default_tol);
                    Entry {
                        name: name.to_string(),
                        defect: Some(defect),
                        tolerance,
                        pass: defect <= tolerance,
                        error: None,
                    }
                })
                .collect(),
            Err(e) => vec![Entry {
                name: suite.to_string(),
                defect: None,
                tolerance: tol.unwrap_or(0.0),
                pass: false,
                error: Some(e.to_string()),
            }],
        })
        .collect();
    let invariants: Vec<Entry> = results.into_iter().flatten().collect();
    let all_pass = invariants.iter().all(|e| e.pass);
    Report {
        params: Matrix {
            a: params.a,
            b: params.b,
            c: params.c,
            d: params.d,
            p: params.p,
            q: params.q,
        },
        invariants,
        all_pass,
    }
}

/// Runs every suite and writes the report; returns whether all invariants hold.
pub fn run(cfg: &RunConfig, args: &CheckArgs) -> anyhow::Result<bool> {
    let tol = cfg.pick_opt(args.tol, "tol")?;
    let report = report(&cfg.params, tol);
    let output = cfg.pick_opt(args.output.clone(), "output")?;
    let mut w = sink(output.as_deref())?;
    serde_json::to_writer_pretty(&mut w, &report)?;
    writeln!(w)?;
    w.flush()?;
    Ok(report.all_pass)
}

use std::io::Write;
