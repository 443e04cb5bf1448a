//! Function approximation on `[0, 1]` by truncated Haar-type series with
//! midpoint collocation.
//!
//! At level `J` there are `2M` basis functions, `M = 2ᴶ`. Function `σ = 1` is
//! `χ_[0,1)`; function `σ ≥ 2` is `∓w(ς)` on the two halves of
//! `[k/m, (k+1)/m)`, where `σ = m + k + 1` (`σ = 2` covers all of `[0, 1)`).
//! The envelope `w` is `Im e^{−(i/2B)(Aς² + p)}` for the special affine basis
//! and `1` for the classical Haar basis.

use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SaftError};
use crate::grid::UniformGrid;
use crate::linalg::{condition_1, Lu, Matrix};
use crate::transform::SaftParams;

/// Default bound on the 1-norm condition number of the collocation matrix.
pub const DEFAULT_CONDITION_BOUND: f64 = 1e12;
/// Default number of points in the error grid.
pub const DEFAULT_ERROR_POINTS: usize = 2001;
/// Envelope magnitude below which the special affine basis is degenerate.
pub const ENVELOPE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    SpecialAffine,
    ClassicalHaar,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::SpecialAffine => "special_affine",
            BasisKind::ClassicalHaar => "classical_haar",
        }
    }
}

/// Position of basis function `σ` in the dyadic hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    pub sigma: usize,
    /// Level `j`, with `m = 2ʲ` sub-intervals.
    pub j: u32,
    /// Translation `0 ≤ k < m`.
    pub k: usize,
}

impl BasisIndex {
    /// Decodes `σ ≥ 2` as `σ = 2ʲ + k + 1`, checking `σ ≤ 2M`.
    pub fn from_sigma(sigma: usize, m_total: usize) -> Result<Self> {
        if sigma < 2 || sigma > 2 * m_total {
            return Err(SaftError::IndexOutOfRange {
                index: sigma,
                max: 2 * m_total,
            });
        }
        let j = (sigma - 1).ilog2();
        Ok(Self {
            sigma,
            j,
            k: sigma - (1 << j) - 1,
        })
    }

    pub fn m(&self) -> usize {
        1 << self.j
    }
}

/// `(β₁, β₂, β₃) = (2kμΔς, (2k+1)μΔς, 2(k+1)μΔς)` with `μ = M/m`, `Δς = 1/(2M)`.
pub fn breakpoints(sigma: usize, m_total: usize) -> Result<(f64, f64, f64)> {
    let idx = BasisIndex::from_sigma(sigma, m_total)?;
    let mu = (m_total / idx.m()) as f64;
    let step = 1.0 / (2.0 * m_total as f64);
    let k = idx.k as f64;
    Ok((2.0 * k * mu * step, (2.0 * k + 1.0) * mu * step, 2.0 * (k + 1.0) * mu * step))
}

/// The `2M` midpoints `(2l − 1)/(4M)`, `l = 1..=2M`.
pub fn collocation_points(m_total: usize) -> Vec<f64> {
    let denom = 4.0 * m_total as f64;
    (1..=2 * m_total).map(|l| (2 * l - 1) as f64 / denom).collect()
}

type Target = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A collocation problem at level `J` for a real target on `[0, 1]`.
#[derive(Clone)]
pub struct CollocationProblem {
    level: u32,
    params: SaftParams,
    basis: BasisKind,
    target: Target,
    condition_bound: f64,
}

impl fmt::Debug for CollocationProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CollocationProblem")
            .field("level", &self.level)
            .field("params", &self.params)
            .field("basis", &self.basis)
            .finish()
    }
}

impl CollocationProblem {
    pub fn new(
        level: u32,
        params: SaftParams,
        basis: BasisKind,
        target: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        params.validate()?;
        if level > 20 {
            return Err(SaftError::InvalidGrid(format!("level {level} is too large")));
        }
        Ok(Self {
            level,
            params,
            basis,
            target: Arc::new(target),
            condition_bound: DEFAULT_CONDITION_BOUND,
        })
    }

    pub fn with_condition_bound(mut self, bound: f64) -> Self {
        self.condition_bound = bound;
        self
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `M = 2ᴶ`.
    pub fn m(&self) -> usize {
        1 << self.level
    }

    /// Number of basis functions, `2M`.
    pub fn size(&self) -> usize {
        2 * self.m()
    }

    pub fn params(&self) -> &SaftParams {
        &self.params
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn target(&self, x: f64) -> f64 {
        (self.target)(x)
    }

    /// The envelope `w(ς)`.
    pub fn envelope(&self, s: f64) -> f64 {
        match self.basis {
            BasisKind::ClassicalHaar => 1.0,
            BasisKind::SpecialAffine => {
                let p = &self.params;
                -((p.a * s * s + p.p) / (2.0 * p.b)).sin()
            }
        }
    }

    /// `h_σ(ς)` on the half-open supports.
    pub fn basis_h(&self, sigma: usize, s: f64) -> Result<f64> {
        self.basis_value(sigma, s, false)
    }

    /// `h_σ(ς)`; with `close_right` an interval ending at 1 includes 1, which
    /// gives the left limit there.
    fn basis_value(&self, sigma: usize, s: f64, close_right: bool) -> Result<f64> {
        let inside = |lo: f64, hi: f64| s >= lo && (s < hi || (close_right && hi == 1.0 && s == 1.0));
        if sigma == 1 {
            return if sigma <= self.size() {
                Ok(if inside(0.0, 1.0) { 1.0 } else { 0.0 })
            } else {
                Err(SaftError::IndexOutOfRange { index: 1, max: self.size() })
            };
        }
        let (b1, b2, b3) = breakpoints(sigma, self.m())?;
        let sign = if inside(b1, b2) {
            -1.0
        } else if inside(b2, b3) {
            1.0
        } else {
            return Ok(0.0);
        };
        Ok(sign * self.envelope(s))
    }

    /// `H[l][σ] = h_σ(η_l)` over the collocation points.
    pub fn collocation_matrix(&self) -> Matrix {
        let points = collocation_points(self.m());
        Matrix::from_fn(self.size(), |l, sigma| {
            self.basis_value(sigma + 1, points[l], false).expect("index within 1..=2M")
        })
    }

    /// Solves for the coefficients `a_σ` and measures the error on the default grid.
    pub fn solve(&self) -> Result<ApproxResult> {
        let points = collocation_points(self.m());
        if self.basis == BasisKind::SpecialAffine {
            let peak = points.iter().map(|&s| self.envelope(s).abs()).fold(0.0, f64::max);
            if peak < ENVELOPE_FLOOR {
                return Err(SaftError::SingularSystem(format!(
                    "special affine envelope vanishes (max |w| = {peak:e}) at level {}",
                    self.level
                )));
            }
        }
        let h = self.collocation_matrix();
        let lu = Lu::factor(&h).map_err(|e| match e {
            SaftError::SingularSystem(msg) => SaftError::SingularSystem(format!("{msg} at level {}", self.level)),
            other => other,
        })?;
        let condition = condition_1(&h, &lu);
        if !(condition <= self.condition_bound) {
            return Err(SaftError::ConditionTooLarge {
                estimate: condition,
                bound: self.condition_bound,
            });
        }
        let rhs: Vec<f64> = points.iter().map(|&s| self.target(s)).collect();
        let coefficients = lu.solve(&rhs)?;
        let mut result = ApproxResult {
            problem: self.clone(),
            coefficients,
            condition,
            linf: 0.0,
            eval_grid: error_grid(DEFAULT_ERROR_POINTS)?,
        };
        result.linf = result.linf_error(DEFAULT_ERROR_POINTS)?;
        Ok(result)
    }
}

/// `n` equally spaced points `i/(n − 1)` covering `[0, 1]`.
pub fn error_grid(points: usize) -> Result<UniformGrid> {
    UniformGrid::linspace(0.0, 1.0, points)
}

/// Solved coefficients with the error of the resulting approximation.
#[derive(Debug, Clone)]
pub struct ApproxResult {
    problem: CollocationProblem,
    pub coefficients: Vec<f64>,
    /// 1-norm condition number of the collocation matrix.
    pub condition: f64,
    /// Maximum error on `eval_grid`.
    pub linf: f64,
    pub eval_grid: UniformGrid,
}

impl ApproxResult {
    pub fn problem(&self) -> &CollocationProblem {
        &self.problem
    }

    /// `f̃(ς) = Σ_σ a_σ h_σ(ς)`; at `ς = 1` this is the left limit.
    pub fn reconstruct(&self, s: f64) -> f64 {
        let close = s == 1.0;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, a)| a * self.problem.basis_value(j + 1, s, close).expect("index within 1..=2M"))
            .sum()
    }

    /// `max |target(ς) − f̃(ς)|` over `grid_points` equally spaced points of `[0, 1]`.
    pub fn linf_error(&self, grid_points: usize) -> Result<f64> {
        let grid = error_grid(grid_points)?;
        Ok(grid
            .points()
            .map(|s| (self.problem.target(s) - self.reconstruct(s)).abs())
            .fold(0.0, f64::max))
    }
}

/// Free-function form of [`ApproxResult::linf_error`].
pub fn linf_error(result: &ApproxResult, grid_points: usize) -> Result<f64> {
    result.linf_error(grid_points)
}
