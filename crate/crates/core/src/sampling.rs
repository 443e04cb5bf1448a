//! Band limitation in the SAFT domain and chirp-modulated Shannon reconstruction.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, SaftError};
use crate::grid::{SampledFunction, UniformGrid};
use crate::quadrature::{pairwise_sum, trapezoid_weight};
use crate::transform::SaftParams;

/// Default truncation window `|n| ≤ N` for reconstruction sums.
pub const DEFAULT_WINDOW: i64 = 64;

/// Normalised cardinal sine `sin(πt)/(πt)`, with `sinc(0) = 1`.
#[inline]
pub fn sinc(t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else {
        let x = PI * t;
        x.sin() / x
    }
}

/// SAFT bandwidth `Ω` and the matching sampling period `T = Bπ/Ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandlimitSpec {
    omega: f64,
    period: f64,
}

impl BandlimitSpec {
    pub fn new(params: &SaftParams, omega: f64) -> Result<Self> {
        params.validate()?;
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(SaftError::InvalidGrid(format!("bandwidth must be positive, got {omega}")));
        }
        Ok(Self {
            omega,
            period: params.b * PI / omega,
        })
    }

    /// The bandwidth `2ᵏBπ` whose sampling period is `2⁻ᵏ`.
    pub fn dyadic(params: &SaftParams, level: i32) -> Result<Self> {
        Self::new(params, 2f64.powi(level) * params.b * PI)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn period(&self) -> f64 {
        self.period
    }
}

/// Samples `f(nT)` for `n` in a symmetric window `[−N, N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    entries: BTreeMap<i64, Complex64>,
    period: f64,
    window: i64,
}

impl SampleSet {
    /// Samples `f` at `nT` for `|n| ≤ window`.
    pub fn from_fn(f: impl Fn(f64) -> Complex64, period: f64, window: i64) -> Result<Self> {
        if window < 1 {
            return Err(SaftError::InvalidGrid(format!("window must be ≥ 1, got {window}")));
        }
        let entries = (-window..=window).map(|n| (n, f(n as f64 * period))).collect();
        Ok(Self { entries, period, window })
    }

    /// Explicit samples; indices outside the map but inside the window are zero.
    pub fn from_entries(entries: BTreeMap<i64, Complex64>, period: f64, window: i64) -> Result<Self> {
        if window < 1 {
            return Err(SaftError::InvalidGrid(format!("window must be ≥ 1, got {window}")));
        }
        if let Some(n) = entries.keys().find(|n| n.abs() > window) {
            return Err(SaftError::InvalidGrid(format!("sample index {n} outside window {window}")));
        }
        Ok(Self { entries, period, window })
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn get(&self, n: i64) -> Complex64 {
        self.entries.get(&n).copied().unwrap_or_default()
    }

    /// The same samples restricted to `|n| ≤ window`.
    pub fn truncated(&self, window: i64) -> Result<Self> {
        let entries = self
            .entries
            .range(-window..=window)
            .map(|(&n, &v)| (n, v))
            .collect();
        Self::from_entries(entries, self.period, window.min(self.window))
    }
}

/// `g(x) = ∫ F(ζ) exp{−(i/2B)(−2xζ − 2ζ(Dp − Bq) + Dζ²)} dζ` by trapezoidal
/// quadrature over `F`'s grid. `g` is band-limited to `(−Ω/B, Ω/B)` in the
/// ordinary Fourier domain whenever `F` vanishes outside `(−Ω, Ω)`.
pub fn gmap(params: &SaftParams, spectrum: &SampledFunction, x_grid: &UniformGrid) -> Result<SampledFunction> {
    params.validate()?;
    let grid = *spectrum.grid();
    let (n, h) = (grid.count(), grid.step());
    let values = spectrum.values();
    let shift = params.shift();
    let out: Vec<Complex64> = (0..x_grid.count())
        .into_par_iter()
        .map(|i| {
            let x = x_grid.point(i);
            pairwise_sum(n, |j| {
                let z = grid.point(j);
                let phase = -(-2.0 * x * z - 2.0 * z * shift + params.d * z * z) / (2.0 * params.b);
                values[j] * Complex64::from_polar(trapezoid_weight(j, n, h), phase)
            })
        })
        .collect();
    SampledFunction::new(*x_grid, out)
}

/// Reconstructs `f(x)` from `f(nT)` for a signal band-limited to `(−Ω, Ω)` in
/// the SAFT domain:
///
/// ```text
/// f(x) = e^{−(i/2B)(Ax² + 2px)} Σₙ f(nT)·e^{(i/2B)(A(nT)² + 2p·nT)}·sinc(Ω(x − nT)/(Bπ))
/// ```
///
/// truncated to the sample window.
pub fn reconstruct(params: &SaftParams, samples: &SampleSet, spec: &BandlimitSpec, x: f64) -> Result<Complex64> {
    params.validate()?;
    let expected = params.b * PI / spec.omega();
    for period in [samples.period(), spec.period()] {
        if (period - expected).abs() > 1e-12 * expected.abs().max(1.0) {
            return Err(SaftError::PeriodMismatch {
                samples: period,
                expected,
            });
        }
    }
    let (a, b, p) = (params.a, params.b, params.p);
    let t = spec.period();
    let scale = spec.omega() / (b * PI);
    let window = samples.window();
    let sum: Complex64 = pairwise_sum((2 * window + 1) as usize, |k| {
        let n = k as i64 - window;
        let node = n as f64 * t;
        let v = samples.get(n);
        if v == Complex64::default() {
            return v;
        }
        let modulation = Complex64::from_polar(sinc(scale * (x - node)), (a * node * node + 2.0 * p * node) / (2.0 * b));
        v * modulation
    });
    Ok(Complex64::from_polar(1.0, -(a * x * x + 2.0 * x * p) / (2.0 * b)) * sum)
}
