//! Composite trapezoidal quadrature with a fixed pairwise reduction tree.
//!
//! Every sum goes through [`pairwise_sum`], whose split points depend only on
//! the number of terms. Results therefore do not depend on how the caller
//! schedules work across threads.

use std::ops::Add;

use num_complex::Complex64;

use crate::grid::UniformGrid;

const LEAF: usize = 8;

/// Sum of `term(0) + ... + term(n - 1)` reduced along a balanced binary tree.
pub fn pairwise_sum<T, F>(n: usize, term: F) -> T
where
    T: Add<Output = T> + Copy + Default,
    F: Fn(usize) -> T,
{
    fn rec<T, F>(lo: usize, hi: usize, term: &F) -> T
    where
        T: Add<Output = T> + Copy + Default,
        F: Fn(usize) -> T,
    {
        if hi - lo <= LEAF {
            let mut acc = T::default();
            for j in lo..hi {
                acc = acc + term(j);
            }
            acc
        } else {
            let mid = lo + (hi - lo) / 2;
            rec(lo, mid, term) + rec(mid, hi, term)
        }
    }
    rec(0, n, &term)
}

/// Trapezoid weight of node `j` on a grid with `n` nodes and spacing `h`.
#[inline]
pub fn trapezoid_weight(j: usize, n: usize, h: f64) -> f64 {
    if j == 0 || j + 1 == n {
        0.5 * h
    } else {
        h
    }
}

/// Composite trapezoid rule for a complex integrand sampled on `grid`.
pub fn trapezoid<F>(grid: &UniformGrid, f: F) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let n = grid.count();
    let h = grid.step();
    pairwise_sum(n, |j| f(grid.point(j)) * trapezoid_weight(j, n, h))
}

/// Composite trapezoid rule for a real integrand.
pub fn trapezoid_real<F>(grid: &UniformGrid, f: F) -> f64
where
    F: Fn(f64) -> f64,
{
    let n = grid.count();
    let h = grid.step();
    pairwise_sum(n, |j| f(grid.point(j)) * trapezoid_weight(j, n, h))
}

/// Midpoint rule on `cells` equal cells of `[lo, hi]`. Exact for integrands
/// that are constant on every cell.
pub fn midpoint<F>(lo: f64, hi: f64, cells: usize, f: F) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let h = (hi - lo) / cells as f64;
    pairwise_sum(cells, |j| f(lo + (j as f64 + 0.5) * h) * h)
}
