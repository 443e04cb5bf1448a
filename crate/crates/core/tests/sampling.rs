mod common;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saft::mra::{chirp, phi_family, ScalingFunction};
use saft::sampling::{gmap, reconstruct, sinc, BandlimitSpec, SampleSet};
use saft::{Complex64, SaftParams, SampledFunction, UniformGrid};

fn span_element(params: SaftParams, coeffs: Vec<Complex64>) -> impl Fn(f64) -> Complex64 {
    let phi = ScalingFunction::sinc();
    move |x| {
        coeffs
            .iter()
            .zip(-5i64..=5)
            .map(|(c, n)| c * phi_family(&params, &phi, 0, n, x))
            .sum()
    }
}

fn random_coeffs(seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..11).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

#[test]
fn scaling_function_is_reconstructed_exactly() {
    for params in [FIG_S, FIG_S2] {
        let spec = BandlimitSpec::dyadic(&params, 0).unwrap();
        let phi = ScalingFunction::sinc();
        let samples = SampleSet::from_fn(|x| phi_family(&params, &phi, 0, 0, x), spec.period(), 64).unwrap();
        for x in UniformGrid::linspace(-4.0, 4.0, 801).unwrap().points() {
            let got = reconstruct(&params, &samples, &spec, x).unwrap();
            assert!((got - phi_family(&params, &phi, 0, 0, x)).norm() <= 1e-12);
        }
    }
}

#[test]
fn span_elements_are_reconstructed_from_integer_samples() {
    for (seed, params) in [(1, FIG_S), (2, FIG_S2)] {
        let f = span_element(params, random_coeffs(seed));
        let spec = BandlimitSpec::dyadic(&params, 0).unwrap();
        let samples = SampleSet::from_fn(&f, 1.0, 64).unwrap();
        for x in UniformGrid::linspace(-4.0, 4.0, 401).unwrap().points() {
            assert!((reconstruct(&params, &samples, &spec, x).unwrap() - f(x)).norm() <= 1e-10);
        }
    }
}

#[test]
fn reconstruction_interpolates_the_samples() {
    for params in [FIG_S, FIG_S2] {
        let spec = BandlimitSpec::dyadic(&params, 1).unwrap();
        let samples = SampleSet::from_fn(gaussian(Complex64::new(0.3, 0.2)), spec.period(), 32).unwrap();
        for n in -32..=32 {
            let got = reconstruct(&params, &samples, &spec, n as f64 * spec.period()).unwrap();
            assert!((got - samples.get(n)).norm() <= 1e-12);
        }
    }
}

/// `chirp(x)·sinc(x − 1/2)` lies in the band but its samples decay only like
/// `1/n`, so truncating the cardinal series leaves an `O(1/N)` error.
#[test]
fn truncation_error_decays_like_one_over_window() {
    for params in [FIG_S, FIG_S2] {
        let f = |x: f64| chirp(&params, x) * sinc(x - 0.5);
        let spec = BandlimitSpec::dyadic(&params, 0).unwrap();
        let full = SampleSet::from_fn(f, 1.0, 1024).unwrap();
        for x in [0.3, 1.7, -2.2] {
            let errors: Vec<f64> = [32, 64, 128, 256, 512]
                .iter()
                .map(|&n| (reconstruct(&params, &full.truncated(n).unwrap(), &spec, x).unwrap() - f(x)).norm())
                .collect();
            for w in errors.windows(2) {
                assert!(w[1] <= 1.1 * w[0], "x={x}: {errors:?}");
                let ratio = w[1] / w[0];
                assert!((0.4..=0.6).contains(&ratio), "x={x}: {errors:?}");
            }
        }
    }
}

#[test]
fn gmap_of_band_indicator_is_a_sinc() {
    let params = SaftParams::fourier();
    let band = UniformGrid::linspace(-PI, PI, 4001).unwrap();
    let indicator = SampledFunction::from_real_fn(band, |_| 1.0).unwrap();
    let xs = UniformGrid::linspace(-3.0, 3.0, 61).unwrap();
    let g = gmap(&params, &indicator, &xs).unwrap();
    for (x, v) in g.iter() {
        assert!((v - 2.0 * PI * sinc(x)).norm() <= 1e-4, "x={x}");
    }
}

/// `g` from a spectrum supported in `(−Ω, Ω)` has ordinary Fourier transform
/// supported in `(−Ω/B, Ω/B)`.
#[test]
fn gmap_output_is_band_limited() {
    for params in [FIG_S, FIG_S2] {
        let omega = params.b * PI;
        let window = |z: f64| (PI * z / (2.0 * omega)).cos().powi(8);
        let band = UniformGrid::linspace(-omega, omega, 801).unwrap();
        let spectrum = SampledFunction::from_fn(band, |z| Complex64::new(window(z), 0.3 * z * window(z))).unwrap();
        let xs = UniformGrid::spanning(-200.0, 200.0, 0.25).unwrap();
        let g = gmap(&params, &spectrum, &xs).unwrap();
        let ft = |w: f64| {
            saft::quadrature::trapezoid(&xs, |x| {
                let j = ((x - xs.start()) / xs.step()).round() as usize;
                g.values()[j] * Complex64::from_polar(1.0 / (2.0 * PI).sqrt(), -w * x)
            })
        };
        let peak = UniformGrid::linspace(-omega / params.b, omega / params.b, 41)
            .unwrap()
            .points()
            .map(|w| ft(w).norm())
            .fold(0.0, f64::max);
        let cut = omega / params.b + 0.5;
        for j in 0..40 {
            let w = cut + 0.2 * j as f64;
            for w in [w, -w] {
                assert!(ft(w).norm() <= 1e-3 * peak, "ω={w}");
            }
        }
    }
}

#[test]
fn empty_sample_map_reconstructs_zero() {
    let spec = BandlimitSpec::dyadic(&FIG_S2, 0).unwrap();
    let samples = SampleSet::from_entries(BTreeMap::new(), spec.period(), 8).unwrap();
    assert_eq!(reconstruct(&FIG_S2, &samples, &spec, 1.3).unwrap(), Complex64::default());
}

proptest! {
    #[test]
    fn reconstruction_is_linear_in_samples(
        u in proptest::collection::vec(-1.0f64..1.0, 9),
        v in proptest::collection::vec(-1.0f64..1.0, 9),
        x in -4.0f64..4.0,
    ) {
        let spec = BandlimitSpec::dyadic(&FIG_S, 0).unwrap();
        let set = |w: &[f64]| {
            let entries = w.iter().enumerate().map(|(j, &c)| (j as i64 - 4, Complex64::new(c, 0.0))).collect();
            SampleSet::from_entries(entries, 1.0, 4).unwrap()
        };
        let sum: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let lhs = reconstruct(&FIG_S, &set(&sum), &spec, x).unwrap();
        let rhs = reconstruct(&FIG_S, &set(&u), &spec, x).unwrap() + reconstruct(&FIG_S, &set(&v), &spec, x).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-13);
    }
}
