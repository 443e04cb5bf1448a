mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saft::mra::*;
use saft::quadrature::trapezoid;
use saft::wavelets::{haar_filters, shannon_filters};
use saft::{Complex64, SaftParams, UniformGrid};

fn zeta_samples() -> impl Iterator<Item = f64> {
    (0..64).map(|j| (j as f64 + 0.5) * 2.0 * PI / 64.0)
}

/// Half-band distance used to stay clear of the Shannon symbol's jumps.
fn clear_of_band_edges(zeta: f64) -> bool {
    let half = (zeta / 2.0).rem_euclid(PI);
    (half - PI / 2.0).abs() >= 0.1
}

#[test]
fn orthonormality_criterion_both_directions() {
    for (phi, terms) in [(ScalingFunction::sinc(), 4), (ScalingFunction::unit_box(), 10_000)] {
        let worst = zeta_samples().map(|z| periodization_defect(&phi, z, terms).abs()).fold(0.0, f64::max);
        assert!(worst <= 2e-4, "{}: {worst}", phi.label());
        for params in [FIG_S, FIG_S2] {
            let gram = gram_matrix(&params, &phi, -2, 2, &phi.default_rule());
            assert!(identity_defect(&gram) <= 2e-3, "{}", phi.label());
        }
    }
}

#[test]
fn non_orthonormal_generator_fails_both_checks() {
    let wide = ScalingFunction::custom(
        "hat",
        |x| Complex64::new((1.0 - (x - 1.0).abs()).max(0.0), 0.0),
        (0.0, 2.0),
    );
    assert!(periodization_defect(&wide, 1.0, 200).abs() > 0.1);
    let gram = gram_matrix(&FIG_S, &wide, -1, 1, &wide.default_rule());
    assert!(identity_defect(&gram) > 0.1);
}

#[test]
fn sinc_filter_from_quadrature_matches_closed_form() {
    for params in [FIG_S, FIG_S2] {
        let from_phi = lowpass_from_phi(&params, &ScalingFunction::sinc(), -8, 8);
        let (closed, _) = shannon_filters(&params, 8);
        assert!(from_phi.max_deviation(&closed) <= 3e-3);
    }
}

#[test]
fn symbols_are_periodic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (h, d) = shannon_filters(&FIG_S2, 64);
    let s0 = Symbol::new(&FIG_S2, &h, SymbolKind::Lowpass);
    let s1 = Symbol::new(&FIG_S2, &d, SymbolKind::Highpass);
    for _ in 0..200 {
        let z: f64 = rng.gen_range(-10.0..10.0);
        assert!((s0.eval(z + 2.0 * PI) - s0.eval(z)).norm() <= 1e-12);
        assert!((s1.eval(z - 4.0 * PI) - s1.eval(z)).norm() <= 1e-12);
    }
}

#[test]
fn haar_pair_is_admissible() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for params in [FIG_S, FIG_S2] {
        let (h, d) = haar_filters(&params);
        for _ in 0..100 {
            let z: f64 = rng.gen_range(-2.0 * PI..2.0 * PI);
            assert!(qmf_defect(&params, &h, z).abs() <= 1e-12);
            assert!(cross_defect(&params, &h, &d, z).norm() <= 1e-12);
            assert!(highpass_symbol_check(&params, &h, &d, z).norm() <= 1e-12);
        }
    }
}

#[test]
fn truncated_shannon_pair_is_nearly_admissible() {
    for params in [FIG_S, FIG_S2] {
        let (h, _) = shannon_filters(&params, 4096);
        let d = wavelet_coeffs(&params, &h);
        let s0 = Symbol::new(&params, &h, SymbolKind::Lowpass);
        let s1 = Symbol::new(&params, &d, SymbolKind::Highpass);
        for z in zeta_samples().filter(|&z| clear_of_band_edges(z)) {
            assert!(qmf_defect_of(&s0, z).abs() <= 1e-2, "ζ={z}");
            assert!(cross_defect_of(&s0, &s1, z).norm() <= 2e-2, "ζ={z}");
        }
        assert!(highpass_symbol_check(&params, &h, &d, 0.0).norm() <= 1e-10);
    }
}

#[test]
fn haar_refinement_is_exact() {
    for params in [FIG_S, FIG_S2] {
        let (h, _) = haar_filters(&params);
        let phi = ScalingFunction::unit_box();
        for x in UniformGrid::linspace(-1.0, 2.0, 1024).unwrap().points() {
            assert!(refinement_residual(&params, &phi, &h, x).norm() <= 1e-10, "x={x}");
        }
    }
}

#[test]
fn shannon_refinement_residual_shrinks_with_window() {
    let phi = ScalingFunction::sinc();
    let xs: Vec<f64> = UniformGrid::linspace(-3.0, 3.0, 121).unwrap().points().collect();
    for params in [FIG_S, FIG_S2] {
        let residuals: Vec<f64> = [16, 32, 64, 128, 256]
            .iter()
            .map(|&n| {
                let (h, _) = shannon_filters(&params, n);
                let rhs = Synthesis::new(&params, &phi, &h);
                xs.iter()
                    .map(|&x| (phi_family(&params, &phi, 0, 0, x) - rhs.eval(x)).norm())
                    .fold(0.0, f64::max)
            })
            .collect();
        for w in residuals.windows(2) {
            assert!(w[1] < w[0], "{residuals:?}");
        }
    }
}

/// The modulated dilation `exp{i(3Ax² + 2px)/2B}·φ_{S,0,0}(2x)` belongs to the
/// next finer space, so its transform vanishes outside `(−2Bπ, 2Bπ)`.
#[test]
fn modulated_dilation_stays_in_doubled_band() {
    let grid = UniformGrid::spanning(-1000.0, 1000.0, 0.125).unwrap();
    let phi = ScalingFunction::sinc();
    for params in [FIG_S, FIG_S2] {
        let g = |x: f64| {
            let m = Complex64::from_polar(1.0, (3.0 * params.a * x * x + 2.0 * x * params.p) / (2.0 * params.b));
            m * phi_family(&params, &phi, 0, 0, 2.0 * x)
        };
        let edge = 2.0 * params.b * PI + 0.5;
        for j in 0..30 {
            for zeta in [edge + 0.3 * j as f64, -(edge + 0.3 * j as f64)] {
                let v = trapezoid(&grid, |x| g(x) * params.kernel(x, zeta));
                assert!(v.norm() <= 1e-3, "ζ={zeta}: {}", v.norm());
            }
        }
    }
}

#[test]
fn lowpass_phase_placement_reproduces_refinement() {
    let (h, _) = haar_filters(&FIG_S);
    let extracted = lowpass_from_phi(&FIG_S, &ScalingFunction::unit_box(), 0, 1);
    assert!(extracted.max_deviation(&h) <= 1e-15);
    assert!((h.get(0).norm() - FRAC_1_SQRT_2).abs() < 1e-15);
}

fn two_tap(params: SaftParams, theta: f64) -> FilterSequence {
    let phase = -(params.a / 4.0 + params.p) / (2.0 * params.b);
    FilterSequence::new(
        0,
        vec![
            Complex64::from_polar(FRAC_1_SQRT_2, theta),
            Complex64::from_polar(FRAC_1_SQRT_2, phase + theta),
        ],
    )
}

proptest! {
    #[test]
    fn symbol_periodicity_for_random_filters(
        re in proptest::collection::vec(-1.0f64..1.0, 1..12),
        lo in -6i64..6,
        z in -20.0f64..20.0,
    ) {
        let h = FilterSequence::new(lo, re.iter().map(|&r| Complex64::new(r, 0.5 * r)).collect());
        let s = Symbol::new(&FIG_S, &h, SymbolKind::Lowpass);
        prop_assert!((s.eval(z + 2.0 * PI) - s.eval(z)).norm() <= 1e-12);
    }

    #[test]
    fn unit_phase_haar_variants_stay_admissible(theta in -PI..PI, z in -PI..PI) {
        let h = two_tap(FIG_S2, theta);
        let d = wavelet_coeffs(&FIG_S2, &h);
        prop_assert!(qmf_defect(&FIG_S2, &h, z).abs() <= 1e-12);
        prop_assert!(cross_defect(&FIG_S2, &h, &d, z).norm() <= 1e-12);
    }
}
