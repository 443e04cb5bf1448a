//! The special affine Fourier transform (SAFT).
//!
//! For an augmented matrix `S = [A B | p; C D | q]` with `AD - BC = 1` and
//! `B > 0` the transform of `f` is
//!
//! ```text
//! O_S[f](ζ) = ∫ f(x) K_S(x, ζ) dx,
//! K_S(x, ζ) = 1/√(2πiB) · exp{ i/(2B) · (A x² + 2x(p − ζ) − 2ζ(Dp − Bq) + D(ζ² + p²)) }
//! ```
//!
//! with `1/√(2πiB) = e^{−iπ/4}/√(2πB)` (principal branch). Integrals are
//! evaluated with the composite trapezoid rule on the sample grid of the input,
//! so accuracy rests on the input decaying at the grid edges; inputs that do not
//! are rejected with [`SaftError::EdgeMassTooLarge`].

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, SaftError};
use crate::grid::{SampledFunction, UniformGrid};
use crate::quadrature::{pairwise_sum, trapezoid_weight};

/// Relative magnitude allowed at the first and last sample of a transform input.
pub const EDGE_MASS_LIMIT: f64 = 1e-8;

/// Tolerance on `|AD − BC − 1|`.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// Parameters `[A B | p; C D | q]` of a special affine Fourier transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaftParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub p: f64,
    pub q: f64,
}

impl SaftParams {
    /// Builds and validates a parameter set.
    pub fn new(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> Result<Self> {
        let params = Self::unchecked(a, b, c, d, p, q);
        params.validate()?;
        Ok(params)
    }

    /// Builds a parameter set without validation. Used for inverse matrices,
    /// whose `B` entry is negative.
    pub const fn unchecked(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> Self {
        Self { a, b, c, d, p, q }
    }

    /// The plain Fourier transform `e^{−iπ/4}·ℱ`, i.e. `[0 1 | 0; −1 0 | 0]`.
    pub const fn fourier() -> Self {
        Self::unchecked(0.0, 1.0, -1.0, 0.0, 0.0, 0.0)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Checks unimodularity and `B > 0`.
    pub fn validate(&self) -> Result<()> {
        let det = self.det();
        if !det.is_finite() || (det - 1.0).abs() > UNIMODULAR_TOL {
            return Err(SaftError::NotUnimodular { det });
        }
        if !(self.b > 0.0) {
            return Err(SaftError::NonpositiveB { b: self.b });
        }
        if ![self.p, self.q].iter().all(|v| v.is_finite()) {
            return Err(SaftError::NonFinite("offsets p, q must be finite".into()));
        }
        Ok(())
    }

    /// `Dp − Bq`, the frequency offset that appears throughout the kernel.
    #[inline]
    pub fn shift(&self) -> f64 {
        self.d * self.p - self.b * self.q
    }

    /// `K_S(x, ζ)` for `B ≠ 0`.
    #[inline]
    pub fn kernel(&self, x: f64, zeta: f64) -> Complex64 {
        let phase = (self.a * x * x + 2.0 * x * (self.p - zeta) - 2.0 * zeta * self.shift()
            + self.d * (zeta * zeta + self.p * self.p))
            / (2.0 * self.b);
        let magnitude = 1.0 / (2.0 * PI * self.b.abs()).sqrt();
        // principal root of 2πiB: e^{iπ/4} for B > 0, e^{−iπ/4} for B < 0
        Complex64::from_polar(magnitude, phase - FRAC_PI_4 * self.b.signum())
    }

    /// The unit-modulus inversion prefactor `exp{(i/2)(CDp² + ABq² − 2ADpq)}`.
    pub fn prefactor(&self) -> Complex64 {
        let (a, b, c, d, p, q) = (self.a, self.b, self.c, self.d, self.p, self.q);
        Complex64::from_polar(1.0, 0.5 * (c * d * p * p + a * b * q * q - 2.0 * a * d * p * q))
    }

    /// Inverse matrix `[D −B; −C A]` with offsets `(Dp − Bq, Aq − Cp)`.
    ///
    /// The result has `B < 0` and is therefore not a valid forward parameter
    /// set. Note that the kernel built from these offsets is *not* the inverse
    /// kernel once `(p, q) ≠ 0`; see [`SaftParams::inverse_kernel`].
    pub fn invert(&self) -> SaftParams {
        SaftParams::unchecked(
            self.d,
            -self.b,
            -self.c,
            self.a,
            self.d * self.p - self.b * self.q,
            self.a * self.q - self.c * self.p,
        )
    }

    /// Inverse kernel evaluated from its own closed form: the kernel of the
    /// matrix `[D −B; −C A]` with offsets `(Bq − Dp, Cp − Aq)`, taken at
    /// `(ζ, x)`. Equals `conj(𝕀_S · K_S(x, ζ))` exactly.
    pub fn inverse_kernel(&self, zeta: f64, x: f64) -> Complex64 {
        let inv = self.invert();
        SaftParams { p: -inv.p, q: -inv.q, ..inv }.kernel(zeta, x)
    }

    /// `(1/|a|)·exp{(i/2B)(2ζ(Dp − Bq)(1/a − 1) − ζ²D(1/a² − 1))}`, the factor
    /// relating the transform of a chirp-compensated dilation to the transform
    /// of the original signal at `ζ/a`.
    pub fn dilation_factor(&self, a: f64, zeta: f64) -> Complex64 {
        let inv = 1.0 / a;
        let phase = (2.0 * zeta * self.shift() * (inv - 1.0) - zeta * zeta * self.d * (inv * inv - 1.0))
            / (2.0 * self.b);
        Complex64::from_polar(1.0 / a.abs(), phase)
    }

    /// `exp{(i/2B)(Ax²(1/a² − 1) + 2px(1/a − 1))}`: the chirp that turns the
    /// transform of `f(a·)` into a rescaled transform of `chirp·f`.
    pub fn dilation_chirp(&self, a: f64, x: f64) -> Complex64 {
        let inv = 1.0 / a;
        let phase = (self.a * x * x * (inv * inv - 1.0) + 2.0 * self.p * x * (inv - 1.0)) / (2.0 * self.b);
        Complex64::from_polar(1.0, phase)
    }

    /// `exp{−(i/2B)(Ax²(1 − a²) + 2xp(1 − a))}`, the modulation applied by
    /// [`chirp_dilate`].
    pub fn compensating_chirp(&self, a: f64, x: f64) -> Complex64 {
        let phase = -(self.a * x * x * (1.0 - a * a) + 2.0 * x * self.p * (1.0 - a)) / (2.0 * self.b);
        Complex64::from_polar(1.0, phase)
    }
}

/// Free-function form of [`SaftParams::validate`].
pub fn validate(params: &SaftParams) -> Result<()> {
    params.validate()
}

/// Free-function form of [`SaftParams::kernel`].
pub fn kernel(params: &SaftParams, x: f64, zeta: f64) -> Complex64 {
    params.kernel(x, zeta)
}

/// Free-function form of [`SaftParams::prefactor`].
pub fn prefactor(params: &SaftParams) -> Complex64 {
    params.prefactor()
}

/// Free-function form of [`SaftParams::invert`].
pub fn invert_params(params: &SaftParams) -> SaftParams {
    params.invert()
}

fn check_edges(f: &SampledFunction) -> Result<()> {
    let ratio = f.edge_ratio();
    if ratio > EDGE_MASS_LIMIT {
        return Err(SaftError::EdgeMassTooLarge {
            ratio,
            limit: EDGE_MASS_LIMIT,
        });
    }
    Ok(())
}

/// Applies `integral(t)` at every point of `out`, in parallel.
fn evaluate_on(out: &UniformGrid, integral: impl Fn(f64) -> Complex64 + Sync) -> Vec<Complex64> {
    (0..out.count())
        .into_par_iter()
        .map(|j| integral(out.point(j)))
        .collect()
}

/// `O_S[f]` on `zeta_grid` by trapezoidal quadrature over `f`'s grid.
pub fn forward(params: &SaftParams, f: &SampledFunction, zeta_grid: &UniformGrid) -> Result<SampledFunction> {
    params.validate()?;
    check_edges(f)?;
    let grid = *f.grid();
    let (n, h) = (grid.count(), grid.step());
    let values = f.values();
    let out = evaluate_on(zeta_grid, |zeta| {
        pairwise_sum(n, |j| values[j] * params.kernel(grid.point(j), zeta) * trapezoid_weight(j, n, h))
    });
    SampledFunction::new(*zeta_grid, out)
}

/// Inverse transform `𝕀_S ∫ F(ζ) K_{S⁻¹}(ζ, x) dζ`, with the inverse kernel
/// taken as `conj(𝕀_S · K_S(x, ζ))`.
pub fn inverse(params: &SaftParams, spectrum: &SampledFunction, x_grid: &UniformGrid) -> Result<SampledFunction> {
    params.validate()?;
    check_edges(spectrum)?;
    let grid = *spectrum.grid();
    let (n, h) = (grid.count(), grid.step());
    let values = spectrum.values();
    let pre = params.prefactor();
    let out = evaluate_on(x_grid, |x| {
        let integral = pairwise_sum(n, |j| {
            values[j] * (pre * params.kernel(x, grid.point(j))).conj() * trapezoid_weight(j, n, h)
        });
        pre * integral
    });
    SampledFunction::new(*x_grid, out)
}

/// Trapezoidal estimate of `∫|f|²`.
pub fn energy(f: &SampledFunction) -> f64 {
    let grid = f.grid();
    let (n, h) = (grid.count(), grid.step());
    let values = f.values();
    pairwise_sum(n, |j| values[j].norm_sqr() * trapezoid_weight(j, n, h))
}

/// Trapezoidal estimate of `⟨f, g⟩ = ∫ f·conj(g)`. Both must share a grid.
pub fn inner_product(f: &SampledFunction, g: &SampledFunction) -> Result<Complex64> {
    if f.grid() != g.grid() {
        return Err(SaftError::InvalidGrid("inner product needs identical grids".into()));
    }
    let grid = f.grid();
    let (n, h) = (grid.count(), grid.step());
    let (fv, gv) = (f.values(), g.values());
    Ok(pairwise_sum(n, |j| fv[j] * gv[j].conj() * trapezoid_weight(j, n, h)))
}

/// `‖approx − reference‖₂ / ‖reference‖₂` on a shared grid.
pub fn relative_l2_error(approx: &SampledFunction, reference: &SampledFunction) -> Result<f64> {
    if approx.grid() != reference.grid() {
        return Err(SaftError::InvalidGrid("error needs identical grids".into()));
    }
    let diff: Vec<Complex64> = approx
        .values()
        .iter()
        .zip(reference.values())
        .map(|(a, r)| a - r)
        .collect();
    let diff = SampledFunction::new(*approx.grid(), diff)?;
    Ok((energy(&diff) / energy(reference)).sqrt())
}

/// `x ↦ exp{−(i/2B)(Ax²(1 − a²) + 2xp(1 − a))}·f(ax)` on `f`'s grid, with
/// `f(ax)` obtained by band-limited interpolation of the samples.
pub fn chirp_dilate(params: &SaftParams, f: &SampledFunction, a: f64) -> Result<SampledFunction> {
    if a == 0.0 {
        return Err(SaftError::ZeroScale);
    }
    if a == 1.0 {
        return Ok(f.clone());
    }
    let grid = *f.grid();
    let values = evaluate_on(&grid, |x| params.compensating_chirp(a, x) * f.interpolate(a * x));
    SampledFunction::new(grid, values)
}

/// Same as [`chirp_dilate`] for a signal given in closed form, evaluated
/// exactly on `grid`.
pub fn chirp_dilate_fn<F>(params: &SaftParams, f: F, grid: &UniformGrid, a: f64) -> Result<SampledFunction>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if a == 0.0 {
        return Err(SaftError::ZeroScale);
    }
    let values = evaluate_on(grid, |x| params.compensating_chirp(a, x) * f(a * x));
    SampledFunction::new(*grid, values)
}
