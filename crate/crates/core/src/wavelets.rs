//! Closed-form special affine wavelet families built on `sinc` (Shannon type)
//! and on `χ_[0,1)` (Haar type).

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use num_complex::Complex64;

use crate::mra::{wavelet_coeffs, FilterSequence, ScalingFunction, Synthesis};
use crate::transform::SaftParams;

/// Default window `|n| ≤ N` for synthesizing the Shannon wavelet.
pub const SHANNON_SYNTHESIS_WINDOW: i64 = 512;
/// Default window `|n| ≤ N` for Shannon symbol checks.
pub const SHANNON_SYMBOL_WINDOW: i64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveletKind {
    Shannon,
    Haar,
}

/// `e^{−(i/2B)(An²/4 + pn)}`.
fn half_node_phase(params: &SaftParams, n: i64) -> Complex64 {
    let n = n as f64;
    Complex64::from_polar(1.0, -(params.a * n * n / 4.0 + params.p * n) / (2.0 * params.b))
}

/// Shannon-type filters on `|n| ≤ window`:
///
/// ```text
/// h_0 = 1/√2,  h_n = √2/(πn)·sin(nπ/2)·e^{−(i/2B)(An²/4 + pn)}
/// d_1 = e^{−(i/2B)(A/4 + p)}/√2,
/// d_n = √2/(π(n − 1))·(−1)^{−n}·cos(nπ/2)·e^{−(i/2B)(An²/4 + pn)}
/// ```
pub fn shannon_filters(params: &SaftParams, window: i64) -> (FilterSequence, FilterSequence) {
    assert!(window >= 1, "Shannon window must be at least 1");
    let h = FilterSequence::from_fn(-window, window, |n| {
        if n == 0 {
            Complex64::new(FRAC_1_SQRT_2, 0.0)
        } else {
            // sin(nπ/2) is 0, ±1; evaluate it exactly
            let s = [0.0, 1.0, 0.0, -1.0][n.rem_euclid(4) as usize];
            half_node_phase(params, n) * (SQRT_2 * s / (PI * n as f64))
        }
    });
    let d = FilterSequence::from_fn(-window, window, |n| {
        if n == 1 {
            half_node_phase(params, 1) * FRAC_1_SQRT_2
        } else {
            let c = [1.0, 0.0, -1.0, 0.0][n.rem_euclid(4) as usize];
            let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            half_node_phase(params, n) * (SQRT_2 * sign * c / (PI * (n - 1) as f64))
        }
    });
    (h, d)
}

/// Largest difference between the displayed Shannon `d_n` and the coefficients
/// derived from `h` through [`wavelet_coeffs`], over the indices both windows
/// cover.
pub fn shannon_coeff_mismatch(params: &SaftParams, window: i64) -> f64 {
    let (h, d) = shannon_filters(params, window);
    let derived = wavelet_coeffs(params, &h);
    let lo = d.lo().max(derived.lo());
    let hi = d.hi().min(derived.hi());
    (lo..=hi).map(|n| (d.get(n) - derived.get(n)).norm()).fold(0.0, f64::max)
}

/// The Shannon-type mother wavelet synthesized from the displayed `d_n`,
/// `|n| ≤ window`.
pub fn shannon_psi(params: &SaftParams, window: i64, x: f64) -> Complex64 {
    WaveletFamily::shannon(params, window).psi(x)
}

/// Haar-type filters: `h_0 = 1/√2`, `h_1 = e^{−(i/2B)(A/4 + p)}/√2`, and the
/// matching wavelet coefficients.
pub fn haar_filters(params: &SaftParams) -> (FilterSequence, FilterSequence) {
    let h = FilterSequence::new(
        0,
        vec![
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            half_node_phase(params, 1) * FRAC_1_SQRT_2,
        ],
    );
    let d = wavelet_coeffs(params, &h);
    (h, d)
}

/// Closed-form Haar-type wavelet: `∓e^{−(i/2B)(Ax² + p)}` on `[0, 1/2)` and
/// `[1/2, 1)`, zero elsewhere.
pub fn haar_psi(params: &SaftParams, x: f64) -> Complex64 {
    let sign = if (0.0..0.5).contains(&x) {
        -1.0
    } else if (0.5..1.0).contains(&x) {
        1.0
    } else {
        return Complex64::default();
    };
    Complex64::from_polar(sign, -(params.a * x * x + params.p) / (2.0 * params.b))
}

/// A scaling function together with its low- and high-pass filters.
#[derive(Debug, Clone)]
pub struct WaveletFamily {
    pub kind: WaveletKind,
    pub params: SaftParams,
    pub phi: ScalingFunction,
    pub h: FilterSequence,
    pub d: FilterSequence,
}

impl WaveletFamily {
    pub fn shannon(params: &SaftParams, window: i64) -> Self {
        let (h, d) = shannon_filters(params, window);
        Self {
            kind: WaveletKind::Shannon,
            params: *params,
            phi: ScalingFunction::sinc(),
            h,
            d,
        }
    }

    pub fn haar(params: &SaftParams) -> Self {
        let (h, d) = haar_filters(params);
        Self {
            kind: WaveletKind::Haar,
            params: *params,
            phi: ScalingFunction::unit_box(),
            h,
            d,
        }
    }

    /// Evaluator for `ψ_{S,0,0}` from the family's wavelet coefficients.
    pub fn synthesis(&self) -> Synthesis {
        Synthesis::new(&self.params, &self.phi, &self.d)
    }

    pub fn psi(&self, x: f64) -> Complex64 {
        self.synthesis().eval(x)
    }

    /// `ψ_{S,0,0}` on every point of `xs`, sharing one synthesis setup.
    pub fn psi_on(&self, xs: impl IntoIterator<Item = f64>) -> Vec<Complex64> {
        let s = self.synthesis();
        xs.into_iter().map(|x| s.eval(x)).collect()
    }
}
