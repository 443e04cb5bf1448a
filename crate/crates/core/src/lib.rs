//! Numerical toolkit for the special affine Fourier transform (SAFT).
//!
//! - [`transform`]: parameters, kernel, forward and inverse transforms.
//! - [`sampling`]: band limitation and chirp-modulated Shannon reconstruction.
//! - [`mra`]: chirp-modulated scaling families, filters, symbols, synthesis.
//! - [`wavelets`]: the Shannon-type and Haar-type wavelet families.
//! - [`approx`]: wavelet-collocation approximation on `[0, 1]`.
//!
//! ```
//! use saft::transform::{forward, inverse, relative_l2_error};
//! use saft::{SaftParams, SampledFunction, UniformGrid};
//!
//! let params = SaftParams::new(1.0, 1.0, -1.0, 0.0, 2.0, -1.0)?;
//! let xs = UniformGrid::spanning(-8.0, 8.0, 1.0 / 32.0)?;
//! let f = SampledFunction::from_real_fn(xs, |x| (-x * x / 2.0).exp())?;
//! let spectrum = forward(&params, &f, &UniformGrid::spanning(-30.0, 30.0, 0.05)?)?;
//! let back = inverse(&params, &spectrum, &xs)?;
//! assert!(relative_l2_error(&back, &f)? < 1e-8);
//! # Ok::<(), saft::SaftError>(())
//! ```

pub mod approx;
pub mod error;
pub mod grid;
pub mod linalg;
pub mod mra;
pub mod quadrature;
pub mod sampling;
pub mod transform;
pub mod wavelets;

pub use error::{Result, SaftError};
pub use grid::{SampledFunction, UniformGrid};
pub use num_complex::Complex64;
pub use transform::SaftParams;
