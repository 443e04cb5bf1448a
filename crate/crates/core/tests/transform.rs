mod common;

use std::f64::consts::PI;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saft::transform::{chirp_dilate, chirp_dilate_fn, energy, forward, inverse, relative_l2_error};
use saft::{Complex64, SaftError, SaftParams, UniformGrid};

fn x_grid() -> UniformGrid {
    UniformGrid::spanning(-8.0, 8.0, 1.0 / 16.0).unwrap()
}

#[test]
fn gaussian_oracle_matches_quadrature() {
    for params in [FIG_S, FIG_S2, SaftParams::fourier()] {
        let alpha = Complex64::new(0.7, 0.3);
        let f = sample(x_grid(), gaussian(alpha));
        let zeta = UniformGrid::linspace(-6.0, 6.0, 97).unwrap();
        let got = forward(&params, &f, &zeta).unwrap();
        let want: Vec<_> = zeta.points().map(|z| gaussian_saft(&params, alpha, z)).collect();
        assert!(max_abs_diff(got.values(), &want) < 1e-10);
    }
}

#[test]
fn fourier_reduction() {
    let grid = UniformGrid::spanning(-8.0, 8.0, 1.0 / 64.0).unwrap();
    let zeta = UniformGrid::linspace(-8.0, 8.0, 321).unwrap();
    let centred = sample(grid, |x| Complex64::new((-x * x / 2.0).exp(), 0.0));
    let shifted = sample(grid, |x| Complex64::new((-(x - 1.0).powi(2) / 2.0).exp(), 0.0));
    let params = SaftParams::fourier();
    for f in [centred, shifted] {
        let spectrum = forward(&params, &f, &zeta).unwrap();
        for (z, v) in spectrum.iter() {
            assert!((v.norm() - (-z * z / 2.0).exp()).abs() <= 1e-6);
        }
    }
}

#[test]
fn round_trip_and_parseval() {
    let signals = [Complex64::new(1.0, 0.0), Complex64::new(0.5, -0.25), Complex64::new(0.5, 0.0)];
    for params in [FIG_S, FIG_S2] {
        for alpha in signals {
            let f = sample(x_grid(), gaussian(alpha));
            let zeta = spectral_grid(&params, alpha, 8.0);
            let spectrum = forward(&params, &f, &zeta).unwrap();
            let back = inverse(&params, &spectrum, f.grid()).unwrap();
            assert!(relative_l2_error(&back, &f).unwrap() <= 1e-6);
            let (ef, es) = (energy(&f), energy(&spectrum));
            assert!((ef - es).abs() <= 1e-5 * ef);
        }
    }
}

#[test]
fn inverse_kernel_is_conjugate_of_scaled_forward_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for params in [FIG_S, FIG_S2] {
        let pre = params.prefactor();
        for _ in 0..1000 {
            let x: f64 = rng.gen_range(-5.0..5.0);
            let z: f64 = rng.gen_range(-5.0..5.0);
            let lhs = params.inverse_kernel(z, x);
            let rhs = (pre * params.kernel(x, z)).conj();
            assert!((lhs - rhs).norm() <= 1e-12, "x={x} ζ={z}");
        }
    }
}

/// `O_S[f(a·)](ζ) = factor(ζ)·O_S[chirp·f](ζ/a)` and
/// `O_S[chirp_dilate(f, a)](ζ) = factor(ζ)·O_S[f](ζ/a)`.
#[test]
fn dilation_identities() {
    let grid = UniformGrid::spanning(-20.0, 20.0, 1.0 / 32.0).unwrap();
    let zeta = UniformGrid::linspace(-8.0, 8.0, 257).unwrap();
    let f = |x: f64| Complex64::new((-x * x / 2.0).exp(), 0.0);
    for params in [FIG_S, FIG_S2] {
        for a in [0.5, 2.0, 3.0] {
            let scaled_zeta = zeta.scaled(1.0 / a).unwrap();
            let factor: Vec<_> = zeta.points().map(|z| params.dilation_factor(a, z)).collect();

            let dilated = sample(grid, |x| f(a * x));
            let chirped = sample(grid, |x| params.dilation_chirp(a, x) * f(x));
            let lhs = forward(&params, &dilated, &zeta).unwrap();
            let rhs = forward(&params, &chirped, &scaled_zeta).unwrap();
            let rhs: Vec<_> = rhs.values().iter().zip(&factor).map(|(v, c)| v * c).collect();
            assert!(max_abs_diff(lhs.values(), &rhs) <= 1e-5, "first identity, a={a}");

            let compensated = chirp_dilate_fn(&params, f, &grid, a).unwrap();
            let plain = sample(grid, f);
            let lhs = forward(&params, &compensated, &zeta).unwrap();
            let rhs = forward(&params, &plain, &scaled_zeta).unwrap();
            let rhs: Vec<_> = rhs.values().iter().zip(&factor).map(|(v, c)| v * c).collect();
            assert!(max_abs_diff(lhs.values(), &rhs) <= 1e-5, "second identity, a={a}");
        }
    }
}

#[test]
fn interpolated_dilation_matches_exact_evaluation() {
    let grid = UniformGrid::spanning(-20.0, 20.0, 1.0 / 8.0).unwrap();
    let f = |x: f64| Complex64::new((-x * x / 2.0).exp(), 0.0);
    let sampled = sample(grid, f);
    for a in [0.5, 2.0] {
        let interp = chirp_dilate(&FIG_S, &sampled, a).unwrap();
        let exact = chirp_dilate_fn(&FIG_S, f, &grid, a).unwrap();
        assert!(max_abs_diff(interp.values(), exact.values()) < 1e-9);
    }
    assert_eq!(chirp_dilate(&FIG_S, &sampled, 0.0), Err(SaftError::ZeroScale));
}

#[test]
fn forward_of_scaling_function_is_band_limited() {
    // φ_{S,0,0} = chirp·sinc decays too slowly for `forward`'s edge check,
    // so the truncated integral is formed directly on a wide window.
    let grid = UniformGrid::spanning(-1000.0, 1000.0, 0.125).unwrap();
    for params in [FIG_S, FIG_S2] {
        let phi = |x: f64| saft::mra::phi_family(&params, &saft::mra::ScalingFunction::sinc(), 0, 0, x);
        let edge = params.b * PI + 0.5;
        for j in 0..40 {
            let z = edge + j as f64 * 0.25;
            for zeta in [z, -z] {
                let v = saft::quadrature::trapezoid(&grid, |x| phi(x) * params.kernel(x, zeta));
                assert!(v.norm() <= 1e-3, "ζ={zeta}: {}", v.norm());
            }
        }
        let inside = saft::quadrature::trapezoid(&grid, |x| phi(x) * params.kernel(x, 0.3));
        assert!(inside.norm() > 0.1);
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let f = sample(x_grid(), gaussian(Complex64::new(0.5, -0.25)));
    let zeta = spectral_grid(&FIG_S2, Complex64::new(0.5, -0.25), 8.0);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let spectrum = forward(&FIG_S2, &f, &zeta).unwrap();
                let back = inverse(&FIG_S2, &spectrum, f.grid()).unwrap();
                (spectrum, back)
            })
    };
    let (s1, b1) = run(1);
    let (s4, b4) = run(4);
    let bits = |v: &[Complex64]| v.iter().flat_map(|c| [c.re.to_bits(), c.im.to_bits()]).collect::<Vec<_>>();
    assert_eq!(bits(s1.values()), bits(s4.values()));
    assert_eq!(bits(b1.values()), bits(b4.values()));
}

fn unimodular() -> impl Strategy<Value = SaftParams> {
    (0.2f64..3.0, 0.2f64..3.0, -2.0f64..2.0, -3.0f64..3.0, -3.0f64..3.0)
        .prop_map(|(a, b, c, p, q)| SaftParams::unchecked(a, b, c, (1.0 + b * c) / a, p, q))
}

proptest! {
    #[test]
    fn kernel_modulus_is_constant(params in unimodular(), x in -10.0f64..10.0, z in -10.0f64..10.0) {
        prop_assert!(params.validate().is_ok());
        let k = params.kernel(x, z);
        prop_assert!((k.norm() - 1.0 / (2.0 * PI * params.b).sqrt()).abs() < 1e-14);
        prop_assert!((params.prefactor().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn remark_identity_for_random_parameters(params in unimodular(), x in -4.0f64..4.0, z in -4.0f64..4.0) {
        let lhs = params.inverse_kernel(z, x);
        let rhs = (params.prefactor() * params.kernel(x, z)).conj();
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn transform_is_linear(c in -2.0f64..2.0, s in -2.0f64..2.0) {
        let grid = UniformGrid::spanning(-7.0, 7.0, 0.125).unwrap();
        let zeta = UniformGrid::linspace(-3.0, 3.0, 13).unwrap();
        let f = sample(grid, gaussian(Complex64::new(1.0, 0.0)));
        let g = sample(grid, |x| Complex64::new(x, 0.0) * (-x * x).exp());
        let w = Complex64::new(c, s);
        let combo = sample(grid, |x| w * (-x * x).exp() + Complex64::new(x, 0.0) * (-x * x).exp());
        let (ff, fg, fc) = (
            forward(&FIG_S, &f, &zeta).unwrap(),
            forward(&FIG_S, &g, &zeta).unwrap(),
            forward(&FIG_S, &combo, &zeta).unwrap(),
        );
        for j in 0..zeta.count() {
            let want = w * ff.values()[j] + fg.values()[j];
            prop_assert!((fc.values()[j] - want).norm() < 1e-12);
        }
    }
}
