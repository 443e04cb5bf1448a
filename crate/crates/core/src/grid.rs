//! Uniform sample grids and complex-valued functions sampled on them.

use num_complex::Complex64;

use crate::error::{Result, SaftError};

/// Points `start + j * step` for `j = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() {
            return Err(SaftError::InvalidGrid("start and step must be finite".into()));
        }
        if step <= 0.0 {
            return Err(SaftError::InvalidGrid(format!("step must be > 0, got {step}")));
        }
        if count < 2 {
            return Err(SaftError::InvalidGrid(format!("need at least 2 points, got {count}")));
        }
        Ok(Self { start, step, count })
    }

    /// Grid covering `[lo, hi]` inclusive with the given step. The step is
    /// adjusted down so that `hi` lands exactly on the last point.
    pub fn spanning(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(hi > lo) {
            return Err(SaftError::InvalidGrid(format!("empty interval [{lo}, {hi}]")));
        }
        if !(step > 0.0) {
            return Err(SaftError::InvalidGrid(format!("step must be > 0, got {step}")));
        }
        let intervals = ((hi - lo) / step - 1e-9).ceil().max(1.0) as usize;
        Self::new(lo, (hi - lo) / intervals as f64, intervals + 1)
    }

    /// `count` equally spaced points from `lo` to `hi` inclusive.
    pub fn linspace(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(SaftError::InvalidGrid(format!("need at least 2 points, got {count}")));
        }
        Self::new(lo, (hi - lo) / (count - 1) as f64, count)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn end(&self) -> f64 {
        self.point(self.count - 1)
    }

    #[inline]
    pub fn point(&self, j: usize) -> f64 {
        self.start + j as f64 * self.step
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |j| self.point(j))
    }

    /// The same grid with every point multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.start * factor, self.step * factor, self.count)
    }
}

/// Complex samples of a function on a [`UniformGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: UniformGrid,
    values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(grid: UniformGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(SaftError::LengthMismatch {
                expected: grid.count(),
                got: values.len(),
            });
        }
        if let Some(j) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(SaftError::NonFinite(format!("sample {j} is not finite")));
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every grid point.
    pub fn from_fn(grid: UniformGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values)
    }

    pub fn from_real_fn(grid: UniformGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn zeros(grid: UniformGrid) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.count()],
        }
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.grid.points().zip(self.values.iter().copied())
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest edge magnitude relative to the peak magnitude; 0 for the zero function.
    pub fn edge_ratio(&self) -> f64 {
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let first = self.values[0].norm();
        let last = self.values[self.values.len() - 1].norm();
        first.max(last) / peak
    }

    /// Whittaker-Shannon interpolation from the samples, treating the grid
    /// step as the sampling period.
    pub fn interpolate(&self, x: f64) -> Complex64 {
        let h = self.grid.step();
        let t = (x - self.grid.start()) / h;
        crate::quadrature::pairwise_sum(self.values.len(), |j| {
            self.values[j] * crate::sampling::sinc(t - j as f64)
        })
    }
}
