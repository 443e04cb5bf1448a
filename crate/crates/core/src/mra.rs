//! Special affine multiresolution analysis: chirp-modulated scaling families,
//! low/high-pass filters, their 2π-periodic symbols, and wavelet synthesis.
//!
//! All modulations share the chirp `e^{−(i/2B)(A x² + 2p x)}`. For a scaling
//! function `φ` the level-`k` family is
//!
//! ```text
//! φ_{S,k,n}(x) = 2^{k/2}·exp{−(i/2B)(A(x² − (n/2ᵏ)²) + 2p(x − n/2ᵏ))}·φ(2ᵏx − n)
//! ```
//!
//! and a filter `{c_n}` has symbol
//! `(1/√2) Σₙ c_n e^{−inζ} e^{(i/2B)(An²/4 + pn)}`.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::grid::UniformGrid;
use crate::quadrature::{midpoint, pairwise_sum, trapezoid};
use crate::sampling::sinc;
use crate::transform::SaftParams;

type ComplexFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Quadrature rule for inner products of scaling-family members.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InnerProductRule {
    /// Composite trapezoid on a uniform grid.
    Trapezoid(UniformGrid),
    /// Midpoint rule on equal cells of `[lo, hi]`; exact for integrands that
    /// are constant on each cell.
    Cells { lo: f64, hi: f64, cells: usize },
}

impl InnerProductRule {
    pub fn integrate(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        match *self {
            InnerProductRule::Trapezoid(grid) => trapezoid(&grid, f),
            InnerProductRule::Cells { lo, hi, cells } => midpoint(lo, hi, cells, f),
        }
    }

    /// `∫ f·conj(g)`.
    pub fn inner(&self, f: impl Fn(f64) -> Complex64, g: impl Fn(f64) -> Complex64) -> Complex64 {
        self.integrate(|x| f(x) * g(x).conj())
    }
}

#[derive(Clone)]
enum Shape {
    Sinc,
    UnitBox,
    Custom {
        eval: ComplexFn,
        fourier: Option<ComplexFn>,
        support: (f64, f64),
    },
}

/// A scaling function `φ` with an optional closed-form Fourier transform
/// `ℱ[φ](ζ) = (1/√(2π)) ∫ φ(x) e^{−iζx} dx`.
#[derive(Clone)]
pub struct ScalingFunction {
    label: String,
    shape: Shape,
    scale: f64,
}

impl fmt::Debug for ScalingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalingFunction")
            .field("label", &self.label)
            .field("scale", &self.scale)
            .finish()
    }
}

impl ScalingFunction {
    /// `sinc(x) = sin(πx)/(πx)`, generator of the Shannon family.
    pub fn sinc() -> Self {
        Self {
            label: "sinc".into(),
            shape: Shape::Sinc,
            scale: 1.0,
        }
    }

    /// `χ_[0,1)`, generator of the Haar family.
    pub fn unit_box() -> Self {
        Self {
            label: "box".into(),
            shape: Shape::UnitBox,
            scale: 1.0,
        }
    }

    /// A user-supplied generator, negligible outside `support`. Its Fourier
    /// transform is computed by quadrature unless [`Self::with_fourier`] is used.
    pub fn custom(
        label: impl Into<String>,
        eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        support: (f64, f64),
    ) -> Self {
        Self {
            label: label.into(),
            shape: Shape::Custom {
                eval: Arc::new(eval),
                fourier: None,
                support,
            },
            scale: 1.0,
        }
    }

    pub fn with_fourier(mut self, fourier: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        if let Shape::Custom { fourier: slot, .. } = &mut self.shape {
            *slot = Some(Arc::new(fourier));
        }
        self
    }

    /// `c·φ`.
    pub fn scaled(mut self, c: f64) -> Self {
        self.scale *= c;
        self.label = format!("{c}*{}", self.label);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn eval(&self, x: f64) -> Complex64 {
        let v = match &self.shape {
            Shape::Sinc => Complex64::new(sinc(x), 0.0),
            Shape::UnitBox => Complex64::new(if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 }, 0.0),
            Shape::Custom { eval, .. } => eval(x),
        };
        v * self.scale
    }

    /// `ℱ[φ](ζ)`. For `sinc` the band edges `|ζ| = π` take the midpoint value.
    pub fn fourier(&self, zeta: f64) -> Complex64 {
        let inv_root = 1.0 / (2.0 * PI).sqrt();
        let v = match &self.shape {
            Shape::Sinc => {
                let level = if zeta.abs() < PI {
                    1.0
                } else if zeta.abs() == PI {
                    0.5
                } else {
                    0.0
                };
                Complex64::new(level * inv_root, 0.0)
            }
            Shape::UnitBox => {
                if zeta == 0.0 {
                    Complex64::new(inv_root, 0.0)
                } else {
                    // (1 − e^{−iζ}) / (iζ)
                    let one_minus = Complex64::new(1.0 - zeta.cos(), zeta.sin());
                    one_minus / Complex64::new(0.0, zeta) * inv_root
                }
            }
            Shape::Custom { eval, fourier, support } => match fourier {
                Some(ft) => ft(zeta),
                None => {
                    let grid = UniformGrid::spanning(support.0, support.1, 1.0 / 256.0)
                        .expect("custom support must be a nonempty interval");
                    trapezoid(&grid, |x| eval(x) * Complex64::from_polar(inv_root, -zeta * x))
                }
            },
        };
        v * self.scale
    }

    /// The rule used for inner products between members of this family.
    pub fn default_rule(&self) -> InnerProductRule {
        match &self.shape {
            Shape::Sinc => InnerProductRule::Trapezoid(
                UniformGrid::spanning(-300.0, 300.0, 0.125).expect("static grid"),
            ),
            Shape::UnitBox => InnerProductRule::Cells {
                lo: -16.0,
                hi: 16.0,
                cells: 128,
            },
            Shape::Custom { support, .. } => {
                let pad = 0.5 * (support.1 - support.0) + 4.0;
                InnerProductRule::Trapezoid(
                    UniformGrid::spanning(support.0 - pad, support.1 + pad, 1.0 / 64.0)
                        .expect("custom support must be a nonempty interval"),
                )
            }
        }
    }
}

/// `e^{−(i/2B)(A x² + 2p x)}`.
#[inline]
pub fn chirp(params: &SaftParams, x: f64) -> Complex64 {
    Complex64::from_polar(1.0, -(params.a * x * x + 2.0 * params.p * x) / (2.0 * params.b))
}

/// `e^{(i/2B)(A t² + 2p t)}` at the node `t = n/2ᵏ`, i.e. the conjugate chirp.
#[inline]
fn node_phase(params: &SaftParams, t: f64) -> Complex64 {
    chirp(params, t).conj()
}

/// `φ_{S,k,n}(x)`.
pub fn phi_family(params: &SaftParams, phi: &ScalingFunction, k: i32, n: i64, x: f64) -> Complex64 {
    let scale = 2f64.powi(k);
    let node = n as f64 / scale;
    let phase = -(params.a * (x * x - node * node) + 2.0 * params.p * (x - node)) / (2.0 * params.b);
    Complex64::from_polar(scale.sqrt(), phase) * phi.eval(scale * x - n as f64)
}

/// Gram matrix `⟨φ_{S,0,n}, φ_{S,0,ℓ}⟩` for `n, ℓ ∈ lo..=hi` under `rule`.
pub fn gram_matrix(
    params: &SaftParams,
    phi: &ScalingFunction,
    lo: i64,
    hi: i64,
    rule: &InnerProductRule,
) -> Vec<Vec<Complex64>> {
    (lo..=hi)
        .map(|n| {
            (lo..=hi)
                .map(|l| {
                    rule.inner(
                        |x| phi_family(params, phi, 0, n, x),
                        |x| phi_family(params, phi, 0, l, x),
                    )
                })
                .collect()
        })
        .collect()
}

/// Largest entrywise deviation of a square matrix from the identity.
pub fn identity_defect(m: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

/// `2π Σ_{|k|≤K} |ℱ[φ](ζ + 2kπ)|² − 1`. Zero means the integer shifts of `φ`
/// (and hence the chirp-modulated family `φ_{S,0,n}`) are orthonormal.
pub fn periodization_defect(phi: &ScalingFunction, zeta: f64, terms: usize) -> f64 {
    let k_max = terms as i64;
    let sum: f64 = pairwise_sum((2 * k_max + 1) as usize, |j| {
        let k = j as i64 - k_max;
        phi.fourier(zeta + 2.0 * PI * k as f64).norm_sqr()
    });
    2.0 * PI * sum - 1.0
}

/// Complex filter coefficients `c_n` for `n = lo..=hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterSequence {
    lo: i64,
    coeffs: Vec<Complex64>,
}

impl FilterSequence {
    /// Coefficients starting at index `lo`. An empty vector yields the zero filter at `lo..=lo`.
    pub fn new(lo: i64, coeffs: Vec<Complex64>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::default()]
        } else {
            coeffs
        };
        Self { lo, coeffs }
    }

    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> Complex64) -> Self {
        assert!(lo <= hi, "filter window {lo}..={hi} is empty");
        Self::new(lo, (lo..=hi).map(f).collect())
    }

    pub fn zeros(lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, |_| Complex64::default())
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c_n`, zero outside the window.
    pub fn get(&self, n: i64) -> Complex64 {
        if n < self.lo || n > self.hi() {
            Complex64::default()
        } else {
            self.coeffs[(n - self.lo) as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(j, &c)| (self.lo + j as i64, c))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Largest `|c_n − other_n|` over the union of both windows.
    pub fn max_deviation(&self, other: &FilterSequence) -> f64 {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        (lo..=hi).map(|n| (self.get(n) - other.get(n)).norm()).fold(0.0, f64::max)
    }
}

/// `√2·e^{−(i/2B)(An²/4 + pn)}·∫ φ(x)·conj(φ(2x − n)) dx` for `n = lo..=hi`,
/// the coefficients of the refinement `φ_{S,0,0} = Σ h_n φ_{S,1,n}`.
pub fn lowpass_from_phi(params: &SaftParams, phi: &ScalingFunction, lo: i64, hi: i64) -> FilterSequence {
    lowpass_from_phi_with(params, phi, lo, hi, &phi.default_rule())
}

pub fn lowpass_from_phi_with(
    params: &SaftParams,
    phi: &ScalingFunction,
    lo: i64,
    hi: i64,
    rule: &InnerProductRule,
) -> FilterSequence {
    FilterSequence::from_fn(lo, hi, |n| {
        let overlap = rule.inner(|x| phi.eval(x), |x| phi.eval(2.0 * x - n as f64));
        node_phase(params, n as f64 / 2.0).conj() * overlap * SQRT_2
    })
}

/// Which filter a symbol belongs to. Both share the same trigonometric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    Lowpass,
    Highpass,
}

/// The 2π-periodic symbol `(1/√2) Σₙ c_n e^{−inζ} e^{(i/2B)(An²/4 + pn)}`.
#[derive(Debug, Clone)]
pub struct Symbol {
    kind: SymbolKind,
    lo: i64,
    weights: Vec<Complex64>,
}

impl Symbol {
    pub fn new(params: &SaftParams, coeffs: &FilterSequence, kind: SymbolKind) -> Self {
        let weights = coeffs
            .iter()
            .map(|(n, c)| c * node_phase(params, n as f64 / 2.0) / SQRT_2)
            .collect();
        Self {
            kind,
            lo: coeffs.lo(),
            weights,
        }
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn eval(&self, zeta: f64) -> Complex64 {
        let zeta = zeta.rem_euclid(2.0 * PI);
        pairwise_sum(self.weights.len(), |j| {
            let n = self.lo + j as i64;
            self.weights[j] * Complex64::from_polar(1.0, -((n as f64) * zeta).rem_euclid(2.0 * PI))
        })
    }
}

/// Free-function evaluation of a filter symbol at `ζ`.
pub fn symbol(params: &SaftParams, coeffs: &FilterSequence, kind: SymbolKind, zeta: f64) -> Complex64 {
    Symbol::new(params, coeffs, kind).eval(zeta)
}

/// `|S₀(ζ/2)|² + |S₀(ζ/2 + π)|² − 1`.
pub fn qmf_defect(params: &SaftParams, h: &FilterSequence, zeta: f64) -> f64 {
    qmf_defect_of(&Symbol::new(params, h, SymbolKind::Lowpass), zeta)
}

pub fn qmf_defect_of(s0: &Symbol, zeta: f64) -> f64 {
    s0.eval(zeta / 2.0).norm_sqr() + s0.eval(zeta / 2.0 + PI).norm_sqr() - 1.0
}

/// Wavelet coefficients
/// `d_k = (−1)^{1−k}·conj(h_{1−k})·exp{−(i/2B)(A((1−k)² + k²)/4 + p)}`,
/// supported on the reflected window `1 − hi ..= 1 − lo`.
pub fn wavelet_coeffs(params: &SaftParams, h: &FilterSequence) -> FilterSequence {
    FilterSequence::from_fn(1 - h.hi(), 1 - h.lo(), |k| {
        let m = 1 - k;
        let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let (kf, mf) = (k as f64, m as f64);
        let phase = -(params.a * (mf * mf + kf * kf) / 4.0 + params.p) / (2.0 * params.b);
        h.get(m).conj() * Complex64::from_polar(sign, phase)
    })
}

/// `S₀(ζ/2)·conj(S₁(ζ/2)) + S₀(ζ/2 + π)·conj(S₁(ζ/2 + π))`; zero when the
/// wavelet space is orthogonal to the scaling space.
pub fn cross_defect(params: &SaftParams, h: &FilterSequence, d: &FilterSequence, zeta: f64) -> Complex64 {
    let s0 = Symbol::new(params, h, SymbolKind::Lowpass);
    let s1 = Symbol::new(params, d, SymbolKind::Highpass);
    cross_defect_of(&s0, &s1, zeta)
}

pub fn cross_defect_of(s0: &Symbol, s1: &Symbol, zeta: f64) -> Complex64 {
    let half = zeta / 2.0;
    s0.eval(half) * s1.eval(half).conj() + s0.eval(half + PI) * s1.eval(half + PI).conj()
}

/// `S₁(ζ) − e^{−iζ}·conj(S₀(ζ + π))`; zero for the canonical high-pass choice.
pub fn highpass_symbol_check(params: &SaftParams, h: &FilterSequence, d: &FilterSequence, zeta: f64) -> Complex64 {
    let s0 = Symbol::new(params, h, SymbolKind::Lowpass);
    let s1 = Symbol::new(params, d, SymbolKind::Highpass);
    s1.eval(zeta) - Complex64::from_polar(1.0, -zeta) * s0.eval(zeta + PI).conj()
}

/// Evaluates `√2 Σ_k c_k exp{−(i/2B)(A(x² − k²/4) + 2p(x − k/2))}·φ(2x − k)`,
/// i.e. `Σ_k c_k φ_{S,1,k}(x)`. With wavelet coefficients this is the mother
/// wavelet; with low-pass coefficients it is the refinement right-hand side.
#[derive(Debug, Clone)]
pub struct Synthesis {
    params: SaftParams,
    phi: ScalingFunction,
    lo: i64,
    weights: Vec<Complex64>,
}

impl Synthesis {
    pub fn new(params: &SaftParams, phi: &ScalingFunction, coeffs: &FilterSequence) -> Self {
        let weights = coeffs
            .iter()
            .map(|(k, c)| c * node_phase(params, k as f64 / 2.0) * SQRT_2)
            .collect();
        Self {
            params: *params,
            phi: phi.clone(),
            lo: coeffs.lo(),
            weights,
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let sum = pairwise_sum(self.weights.len(), |j| {
            let k = self.lo + j as i64;
            self.weights[j] * self.phi.eval(2.0 * x - k as f64)
        });
        chirp(&self.params, x) * sum
    }
}

/// `ψ_{S,0,0}(x)` from wavelet coefficients `d`.
pub fn synthesize_psi(params: &SaftParams, phi: &ScalingFunction, d: &FilterSequence, x: f64) -> Complex64 {
    Synthesis::new(params, phi, d).eval(x)
}

/// `φ_{S,0,0}(x) − Σₙ hₙ φ_{S,1,n}(x)`.
pub fn refinement_residual(params: &SaftParams, phi: &ScalingFunction, h: &FilterSequence, x: f64) -> Complex64 {
    phi_family(params, phi, 0, 0, x) - synthesize_psi(params, phi, h, x)
}
