#![allow(dead_code)]

use std::f64::consts::PI;

use saft::{Complex64, SaftParams, SampledFunction, UniformGrid};

pub const FIG_S: SaftParams = SaftParams::unchecked(1.0, 1.0, -1.0, 0.0, 2.0, -1.0);
pub const FIG_S2: SaftParams = SaftParams::unchecked(3.0, 2.0, 1.0, 1.0, 1.0, -2.0);

/// Closed-form transform of `e^{−αx²}`, `Re α > 0`, from the Gaussian integral
/// `∫ e^{−ax² + ibx} dx = √(π/a)·e^{−b²/(4a)}`.
pub fn gaussian_saft(params: &SaftParams, alpha: Complex64, zeta: f64) -> Complex64 {
    let (a, b, d, p) = (params.a, params.b, params.d, params.p);
    let quad = alpha - Complex64::new(0.0, a / (2.0 * b));
    let lin = (p - zeta) / b;
    let outer = Complex64::new(0.0, (-2.0 * zeta * params.shift() + d * (zeta * zeta + p * p)) / (2.0 * b)).exp();
    let norm = Complex64::from_polar(1.0 / (2.0 * PI * b).sqrt(), -PI / 4.0);
    norm * outer * (Complex64::new(PI, 0.0) / quad).sqrt() * (-(lin * lin) / (4.0 * quad)).exp()
}

pub fn gaussian(alpha: Complex64) -> impl Fn(f64) -> Complex64 + Sync + Copy {
    move |x| (-alpha * x * x).exp()
}

/// A ζ grid on which the transform of `e^{−αx²}` has decayed below ~1e−12 of
/// its peak, fine enough to resolve the inverse integrand up to `|x| ≤ x_max`.
pub fn spectral_grid(params: &SaftParams, alpha: Complex64, x_max: f64) -> UniformGrid {
    let b = params.b;
    let quad = alpha - Complex64::new(0.0, params.a / (2.0 * b));
    let half = (112.0 * b * b * quad.norm_sqr() / quad.re).sqrt();
    let chirp_rate = (1.0 / (2.0 * quad)).im.abs() * half / (b * b);
    let step = (PI / (2.0 * (chirp_rate + x_max / b))).min(0.05);
    UniformGrid::spanning(params.p - half, params.p + half, step).unwrap()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max)
}

pub fn sample(grid: UniformGrid, f: impl Fn(f64) -> Complex64) -> SampledFunction {
    SampledFunction::from_fn(grid, f).unwrap()
}
