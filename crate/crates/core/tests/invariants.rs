//! Property tests for the invariants the workbench promises.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use scatbench::analytic::{self, LadderIndex, SampledFunction};
use scatbench::levinson;
use scatbench::numeric::{self, SolverConfig};
use scatbench::phase::{reduce_mod, unwrap_by_continuity};
use scatbench::potentials::{sech_squared, Potential, Table};
use scatbench::states::trapezoid_norm_sqr;
use scatbench::{BoundStateCensus, Potential32};

fn fast_cfg() -> SolverConfig<f64> {
    SolverConfig { x_max: 10.0, h: 5e-3, ..SolverConfig::default() }
}

fn gaussian_well(depth: f64, width: f64) -> Potential<f64> {
    let xs: Vec<f64> = (-200..=200).map(|i| i as f64 * 0.05).collect();
    Potential::tabulated_symmetric(Table::from_fn(xs, |x| -depth * (-(x / width).powi(2)).exp()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn potentials_are_even(ell in 0u32..8, x in -30.0f64..30.0) {
        let p = Potential::<f64>::reflectionless(ell);
        prop_assert!((p.value(x) - p.value(-x)).abs() <= 1e-12);
        prop_assert_eq!(Potential::<f64>::zero().value(x), 0.0);
    }

    #[test]
    fn reflectionless_tail_bound(ell in 1u32..8, x in 1.0f64..19.0) {
        let strength = (ell * (ell + 1)) as f64;
        let tail = x * x * Potential::<f64>::reflectionless(ell).value(x).abs();
        prop_assert!(tail <= 4.0 * strength * x * x * (-2.0 * x).exp() * (1.0 + 1e-12));
    }

    #[test]
    fn depth_scales_with_strength(ell in 1u32..8, x in -15.0f64..15.0) {
        let ratio = Potential::<f64>::reflectionless(ell).value(x) / Potential::<f64>::reflectionless(1).value(x);
        let strength = (ell * (ell + 1)) as f64 / 2.0;
        prop_assert!((ratio - strength).abs() <= 1e-12 * strength);
    }

    #[test]
    fn single_precision_tracks_double(ell in 0u32..5, x in -5.0f32..5.0) {
        let single = Potential32::reflectionless(ell).value(x) as f64;
        let double = Potential::<f64>::reflectionless(ell).value(x as f64);
        prop_assert!((single - double).abs() <= 1e-5 * (1.0 + double.abs()));
    }

    #[test]
    fn table_csv_round_trips(values in prop::collection::vec(-1e3f64..1e3, 4..40)) {
        let xs: Vec<f64> = (0..values.len()).map(|i| i as f64 * 0.37 - 3.0).collect();
        let table = Table::new(xs, values).unwrap();
        let mut buf = Vec::new();
        table.to_csv(&mut buf).unwrap();
        prop_assert_eq!(Table::from_csv(buf.as_slice()).unwrap(), table);
    }

    #[test]
    fn exact_coefficients_are_unitary(ell in 0u32..6, k in 0.01f64..50.0) {
        let c = analytic::coefficients(ell, k).unwrap();
        prop_assert_eq!(c.reflected, Complex64::new(0.0, 0.0));
        prop_assert!((c.incident - c.transmitted.conj()).norm() <= 1e-12 * c.transmitted.norm());
        prop_assert!((c.transmission_amplitude().norm() - 1.0).abs() <= 1e-12);
        prop_assert!((c.reflection_probability() + c.transmission_probability() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn phase_shift_decreases(ell in 1u32..6, k in 0.01f64..100.0, factor in 1.001f64..10.0) {
        prop_assert!(analytic::phase_shift(ell, k * factor).unwrap() < analytic::phase_shift(ell, k).unwrap());
        let far = analytic::phase_shift(ell, 1000.0).unwrap();
        prop_assert!(far > 0.0 && far < (ell * ell) as f64 / 1000.0);
    }

    #[test]
    fn intertwining_holds_on_smooth_functions(ell in 1u32..4, width in 0.8f64..2.5, shift in -1.0f64..1.0, k in 0.0f64..2.0) {
        let f = SampledFunction::on_interval(-5.0, 5.0, 1e-3, |x| {
            Complex64::new((-((x - shift) / width).powi(2)).exp(), 0.0) * Complex64::cis(k * x)
        });
        let (a, b) = analytic::intertwining_residuals(LadderIndex::new(ell).unwrap(), &f).unwrap();
        prop_assert!(a <= 1e-6 && b <= 1e-6, "{a} {b}");
    }

    #[test]
    fn wrapping_is_undone(steps in prop::collection::vec(-1.2f64..1.2, 3..60), start in -10.0f64..10.0) {
        let mut curve = vec![start];
        for s in steps {
            curve.push(curve[curve.len() - 1] + s);
        }
        let wrapped: Vec<f64> = curve.iter().map(|&d| reduce_mod(d, PI)).collect();
        let unwrapped = unwrap_by_continuity(&wrapped, PI);
        let offset = unwrapped[0] - curve[0];
        prop_assert!((offset / PI - (offset / PI).round()).abs() < 1e-9);
        for (u, c) in unwrapped.iter().zip(&curve) {
            prop_assert!((u - c - offset).abs() < 1e-9);
        }
    }

    #[test]
    fn predictions_depend_only_on_census(n_even in 0usize..6, n_odd in 0usize..6, critical in 0u8..3) {
        let census = BoundStateCensus {
            n_total: n_even + n_odd,
            n_even,
            n_odd,
            critical_even: critical == 1,
            critical_odd: critical == 2,
        };
        let a = levinson::predict_parity::<f64>(&census).unwrap();
        prop_assert_eq!(a, levinson::predict_parity::<f64>(&census.clone()).unwrap());
        let d = levinson::predict_direct::<f64>(&census).predicted_delta_direct.unwrap();
        let lattice = d / (PI / 2.0);
        prop_assert!((lattice - lattice.round()).abs() < 1e-12);
        prop_assert_eq!(lattice.round() as usize % 2 == 1, census.is_critical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn numeric_flux_is_conserved(depth in 0.2f64..6.0, width in 0.4f64..1.5, k in 0.2f64..4.0) {
        let r = numeric::solve_scattering(&gaussian_well(depth, width), k, &fast_cfg()).unwrap();
        prop_assert!((r.reflection_probability + r.transmission_probability - 1.0).abs() <= 1e-8);
        prop_assert!(r.reflection_probability <= 1.0 + 1e-12 && r.transmission_probability <= 1.0 + 1e-12);
        prop_assert!((0.0..PI).contains(&r.delta));
    }

    #[test]
    fn parity_phases_rebuild_the_amplitudes(depth in 0.2f64..6.0, width in 0.4f64..1.5, k in 0.2f64..4.0) {
        let p = gaussian_well(depth, width);
        let direct = numeric::solve_scattering(&p, k, &fast_cfg()).unwrap();
        let phases = numeric::solve_parity_phases(&p, k, &fast_cfg()).unwrap();
        let (r, t) = phases.reconstruct();
        prop_assert!((r.norm_sqr() + t.norm_sqr() - 1.0).abs() <= 1e-10);
        prop_assert!((r - direct.coefficients.reflection_amplitude()).norm() <= 1e-7);
        prop_assert!((t - direct.coefficients.transmission_amplitude()).norm() <= 1e-7);
        let gap = reduce_mod(phases.total_delta() - direct.delta + PI / 2.0, PI) - PI / 2.0;
        prop_assert!(gap.abs() <= 1e-7);
    }
}

#[test]
fn exact_phase_matches_amplitude_argument() {
    for ell in 1..=4 {
        for k in [0.1f64, 0.5, 1.0, 2.0, 10.0] {
            let from_arg = analytic::phase_shift_from_amplitudes(ell, k).unwrap();
            assert!((from_arg - analytic::phase_shift(ell, k).unwrap()).abs() <= 1e-12, "ell {ell} k {k}");
        }
    }
}

#[test]
fn bound_states_are_normalized_with_definite_parity() {
    for ell in 1..=4 {
        for s in analytic::bound_spectrum::<f64>(ell) {
            assert_eq!(s.node_count, s.n);
            let (xs, psi): (Vec<f64>, Vec<Complex64>) = s.wavefunction.iter().copied().unzip();
            assert!((trapezoid_norm_sqr(&xs, &psi) - 1.0).abs() <= 1e-8);
            let sign = s.parity.sign::<f64>();
            let m = psi.len();
            for i in 0..m {
                assert!((psi[m - 1 - i] - psi[i] * sign).norm() <= 1e-8);
            }
        }
    }
}

#[test]
fn scattering_states_solve_the_wave_equation() {
    for ell in 0..=3u32 {
        for k in [0.3, 1.0, 2.5] {
            let f = SampledFunction::on_interval(-6.0, 6.0, 1e-3, |x| analytic::scattering_wave(ell, k).value(x));
            let h = analytic::apply_hamiltonian(ell, &f).unwrap();
            let residual = h.values.iter().zip(&f.values).map(|(hv, v)| (hv - v * (k * k)).norm()).fold(0.0, f64::max);
            assert!(residual <= 1e-5 * f.sup_norm(), "ell {ell} k {k}: {residual}");
        }
    }
}

#[test]
fn numeric_spectra_match_the_squares() {
    let cfg = SolverConfig::<f64>::default();
    for ell in 1..=4u32 {
        let states = numeric::find_bound_states(&Potential::reflectionless(ell), &cfg).unwrap();
        assert_eq!(states.len(), ell as usize);
        for (n, s) in states.iter().enumerate() {
            let depth = (ell as usize - n) as f64;
            assert!((s.energy + depth * depth).abs() <= 1e-8);
        }
        let c = numeric::numeric_census(&Potential::reflectionless(ell), &cfg).unwrap();
        assert_eq!((c.n_even, c.n_odd), (ell.div_ceil(2) as usize, (ell / 2) as usize));
    }
}

#[test]
fn sech_squared_never_overflows() {
    for x in [0.0, 1.0, 300.0, 800.0, -1e6] {
        let v: f64 = sech_squared(x);
        assert!(v.is_finite() && (0.0..=1.0).contains(&v));
    }
}
