//! Worked examples for each module, checked through the public API.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use scatbench::analytic::{self, LadderIndex, LadderWave, Wavefunction};
use scatbench::levinson::{self, Source, Theorem, Verdict};
use scatbench::numeric::{self, Direction, PhaseParity, SolverConfig};
use scatbench::potentials::{check_decay_condition, make_reflectionless, to_dimensionless, Potential, Table};
use scatbench::{Error, Parity};

fn cfg() -> SolverConfig<f64> {
    SolverConfig::default()
}

// potentials

#[test]
fn reflectionless_depths() {
    assert_eq!(make_reflectionless(0.0).unwrap().evaluate(1.3).unwrap(), 0.0);
    assert_eq!(make_reflectionless(1.0).unwrap().evaluate(0.0).unwrap(), -2.0);
    assert!(matches!(make_reflectionless(1.5), Err(Error::Domain(_))));
    assert!(matches!(make_reflectionless(-1.0), Err(Error::Domain(_))));
    assert_eq!(Potential::<f64>::zero().evaluate(3.7).unwrap(), 0.0);
    assert!(Potential::<f64>::zero().evaluate(f64::NAN).is_err());
}

#[test]
fn tabulated_well_interpolates() {
    let xs: Vec<f64> = (-2000..=2000).map(|i| i as f64 * 0.01).collect();
    let table = Table::from_fn(xs, |x| -2.0 / x.cosh().powi(2)).unwrap();
    let p = Potential::tabulated(table);
    assert!(p.is_symmetric());
    let exact = -2.0 / 0.505f64.cosh().powi(2);
    assert!((p.evaluate(0.505).unwrap() - exact).abs() < 1e-6);
    assert_eq!(p.evaluate(25.0).unwrap(), 0.0);
}

#[test]
fn table_csv_round_trip_and_rejections() {
    let table = Table::from_fn(vec![-1.5, -0.5, 0.5, 1.5], |x: f64| -x * x).unwrap();
    let mut buf = Vec::new();
    table.to_csv(&mut buf).unwrap();
    assert_eq!(Table::<f64>::from_csv(buf.as_slice()).unwrap(), table);
    for bad in ["x,v\n0,1\n1,1\n2,1\n", "x,v\n0,1\n2,1\n1,1\n3,1\n", "x,w\n0,1\n1,1\n2,1\n3,1\n", "x,v\n0,1\n1,oops\n2,1\n3,1\n"] {
        assert!(matches!(Table::<f64>::from_csv(bad.as_bytes()), Err(Error::Format(_))), "{bad}");
    }
}

#[test]
fn dimensionless_depth() {
    assert_eq!(to_dimensionless(1.0, 1.0, 0.5, 1.0).unwrap().depth, 1.0);
    assert_eq!(to_dimensionless(2.0, 3.0, 1.0, 1.0).unwrap().depth, 36.0);
    // depth 2 (the l = 1 well) needs V0 = hbar^2 / (m b^2).
    let (b, m, hbar) = (0.7f64, 1.9, 1.3);
    let v0 = hbar * hbar / (m * b * b);
    assert!((to_dimensionless(v0, b, m, hbar).unwrap().depth - 2.0).abs() < 1e-14);
    assert!(to_dimensionless(1.0, 0.0, 1.0, 1.0).is_err());
    assert!(to_dimensionless(1.0, 1.0, -1.0, 1.0).is_err());
}

#[test]
fn decay_condition() {
    let r = check_decay_condition(&Potential::<f64>::reflectionless(2), &[10.0, 15.0, 20.0, 25.0]).unwrap();
    assert!(r.passes);
    let r = check_decay_condition(&Potential::<f64>::zero(), &[10.0, 20.0]).unwrap();
    assert!(r.passes && r.max_tail == 0.0);
    let xs: Vec<f64> = (0..=40).map(|i| 8.0 + i as f64 * 0.5).collect();
    let inverse_square = Potential::tabulated(Table::from_fn(xs, |x| 1.0 / (x * x)).unwrap()).with_domain_halfwidth(30.0).unwrap();
    assert!(!check_decay_condition(&inverse_square, &[10.0, 15.0, 20.0, 25.0]).unwrap().passes);
    assert!(matches!(check_decay_condition(&Potential::<f64>::zero(), &[5.0]), Err(Error::Domain(_))));
}

// analytic

#[test]
fn ground_states() {
    let one = analytic::ground_state::<f64>(1).unwrap();
    assert_eq!((one.energy, one.parity, one.node_count), (-1.0, Parity::Even, 0));
    let two = analytic::ground_state::<f64>(2).unwrap();
    assert_eq!(two.energy, -4.0);
    // psi / sech^2 is constant.
    let ratio = |(x, p): &(f64, Complex64)| p.re * x.cosh().powi(2);
    let r0 = ratio(&two.wavefunction[2000]);
    assert!(two.wavefunction[1500..2500].iter().all(|s| (ratio(s) / r0 - 1.0).abs() < 1e-12));
    assert_eq!(analytic::ground_state::<f64>(3).unwrap().energy, -9.0);
    assert!(analytic::ground_state::<f64>(0).is_none());
}

#[test]
fn raising_examples() {
    let k = 0.8;
    let raised = analytic::apply_raising(LadderIndex::new(1).unwrap(), &Wavefunction::Closed(LadderWave::plane_wave(k))).unwrap();
    let xs = [-2.0, -0.3, 0.0, 1.1, 4.0];
    let got = raised.sample(&xs).unwrap();
    for (x, g) in xs.iter().zip(got) {
        let expect = Complex64::new(k, x.tanh()) * Complex64::cis(k * x);
        assert!((g - expect).norm() < 1e-14);
    }
    let odd = analytic::apply_raising(LadderIndex::new(2).unwrap(), &Wavefunction::Closed(LadderWave::sech_power(1))).unwrap();
    for (x, g) in xs.iter().zip(odd.sample(&xs).unwrap()) {
        let shape = x.tanh() / x.cosh();
        assert!((g - Complex64::new(0.0, 3.0 * shape)).norm() < 1e-14);
    }
    let zero = analytic::apply_raising(LadderIndex::new(1).unwrap(), &Wavefunction::Closed(LadderWave::zero())).unwrap();
    assert!(zero.sample(&xs).unwrap().iter().all(|v| v.norm() == 0.0));
    assert!(LadderIndex::new(0).is_err());
}

#[test]
fn scattering_wavefunctions() {
    let psi = analytic::scattering_wavefunction(1, 1.0, &[40.0]).unwrap()[0];
    assert!((psi * Complex64::cis(-40.0) - Complex64::new(1.0, 1.0)).norm() < 1e-12);
    let free = analytic::scattering_wavefunction(0, 2.0, &[0.0, 0.7]).unwrap();
    assert!((free[1] - Complex64::cis(1.4)).norm() < 1e-15);
    // Iterated raising: a_2^+ (k + i tanh x) e^{ikx} at x = 0, k = 1 gives
    // k^2 + 2 = 3 minus the derivative term 1, i.e. 2.
    let origin = analytic::scattering_wavefunction(2, 1.0, &[0.0]).unwrap()[0];
    assert!((origin - Complex64::new(2.0, 0.0)).norm() < 1e-14);
}

#[test]
fn coefficient_examples() {
    let c = analytic::coefficients(1, 1.0).unwrap();
    assert_eq!((c.transmitted, c.incident, c.reflected), (Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0), Complex64::new(0.0, 0.0)));
    let c = analytic::coefficients(0, 2.0).unwrap();
    assert_eq!((c.transmitted, c.incident), (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)));
    assert_eq!(analytic::coefficients(2, 1.0).unwrap().transmitted, Complex64::new(-1.0, 3.0));
    assert!(matches!(analytic::coefficients(1, 0.0), Err(Error::Domain(_))));
    assert!(matches!(analytic::coefficients(1, -1.0), Err(Error::Domain(_))));
}

#[test]
fn phase_shift_examples() {
    assert!((analytic::phase_shift(1, 1.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
    assert!((analytic::phase_shift(1, 1e-9).unwrap() - FRAC_PI_2).abs() < 1e-8);
    assert!((analytic::phase_shift(2, 0.5f64).unwrap() - 2.432_966_3).abs() < 1e-7);
    assert!(analytic::phase_shift(1, 0.0).is_err());
    assert_eq!(analytic::phase_shift_zero::<f64>(0), 0.0);
    assert_eq!(analytic::phase_shift_zero::<f64>(1), FRAC_PI_2);
    assert_eq!(analytic::phase_shift_zero::<f64>(3), 1.5 * PI);
}

#[test]
fn spectra() {
    let two = analytic::bound_spectrum::<f64>(2);
    assert_eq!(two.iter().map(|s| (s.energy, s.parity)).collect::<Vec<_>>(), vec![(-4.0, Parity::Even), (-1.0, Parity::Odd)]);
    assert!(analytic::bound_spectrum::<f64>(0).is_empty());
    let four: Vec<f64> = analytic::bound_spectrum::<f64>(4).iter().map(|s| s.energy).collect();
    assert_eq!(four, vec![-16.0, -9.0, -4.0, -1.0]);
}

#[test]
fn half_bound_states() {
    let at = |ell: u32, x: f64| {
        let h = analytic::half_bound_state::<f64>(ell);
        let i = h.wavefunction.iter().position(|(xi, _)| (xi - x).abs() < 1e-9).unwrap();
        (h.parity, h.wavefunction[i].1)
    };
    let (parity, v) = at(0, 3.0);
    assert_eq!(parity, Parity::Even);
    assert!((v - 1.0).norm() < 1e-15);
    let (parity, v) = at(1, 0.5);
    assert_eq!(parity, Parity::Odd);
    assert!((v.re - 0.5f64.tanh()).abs() < 1e-14);
    // The zero-energy state of l = 2 is (3 tanh^2 x - 1) / 2.
    let (parity, v) = at(2, 0.5);
    assert_eq!(parity, Parity::Even);
    let t = 0.5f64.tanh();
    assert!((v.re - (3.0 * t * t - 1.0) / 2.0).abs() < 1e-14);
}

#[test]
fn censuses() {
    let c = analytic::census(1);
    assert_eq!((c.n_even, c.n_odd, c.critical_even, c.critical_odd), (1, 0, false, true));
    let c = analytic::census(2);
    assert_eq!((c.n_even, c.n_odd, c.critical_even, c.critical_odd), (1, 1, true, false));
    let c = analytic::census(0);
    assert_eq!((c.n_total, c.critical_even, c.critical_odd), (0, true, false));
}

// numeric

#[test]
fn numerov_bound_state_of_first_well() {
    let c = cfg();
    let x0 = c.x_max;
    let seed = [1.0 / x0.cosh(), 1.0 / (x0 - c.h).cosh()];
    let sol = numeric::numerov_integrate(&Potential::reflectionless(1), -1.0, Direction::RightToLeft, &c, seed).unwrap();
    let mid = c.half_nodes();
    assert_eq!(sol.xs[mid], 0.0);
    let scale = sol.psi[mid];
    for (x, p) in sol.xs.iter().zip(&sol.psi).filter(|(x, _)| x.abs() <= 5.0) {
        assert!((p / scale - 1.0 / x.cosh()).abs() < 1e-8);
    }
}

#[test]
fn scattering_examples() {
    let free = numeric::solve_scattering(&Potential::zero(), 1.0, &cfg()).unwrap();
    assert!(free.coefficients.reflection_amplitude().norm() < 1e-12);
    assert!((free.transmission_probability - 1.0).abs() < 1e-12);
    assert!(free.delta < 1e-12 || PI - free.delta < 1e-12);

    let one = numeric::solve_scattering(&Potential::reflectionless(1), 1.0, &cfg()).unwrap();
    assert!(one.coefficients.reflection_amplitude().norm() < 1e-8);
    assert!((one.delta - FRAC_PI_4).abs() < 1e-8);

    assert!(matches!(numeric::solve_scattering(&Potential::zero(), 0.0, &cfg()), Err(Error::Domain(_))));
}

#[test]
fn square_well_against_transfer_matrix() {
    let h = 2.5e-4;
    let c = SolverConfig { h, ..cfg() };
    let table = Table::from_csv(common::square_well_csv(-2.0, 1.0, h, 2.0).as_bytes()).unwrap();
    let well = Potential::tabulated_symmetric(table).unwrap();
    let got = numeric::solve_scattering(&well, 1.0, &c).unwrap();
    let (r, t) = common::square_well(-2.0, 1.0, 1.0);
    assert!((got.coefficients.reflection_amplitude() - r).norm() < 1e-7);
    assert!((got.coefficients.transmission_amplitude() - t).norm() < 1e-7);
    assert!((got.reflection_probability + got.transmission_probability - 1.0).abs() < 1e-8);
}

#[test]
fn parity_phase_examples() {
    let free = numeric::solve_parity_phases(&Potential::zero(), 1.7, &cfg()).unwrap();
    for d in [free.delta_even, free.delta_odd] {
        assert!(d < 1e-10 || PI - d < 1e-10, "{d}");
    }
    let one = numeric::solve_parity_phases(&Potential::reflectionless(1), 1.0, &cfg()).unwrap();
    assert!((one.total_delta() - FRAC_PI_4).abs() < 1e-7);
    assert!(one.reconstruct().0.norm() < 1e-8);
    let two = numeric::solve_parity_phases(&Potential::reflectionless(2), 0.5, &cfg()).unwrap();
    let exact = (2.0f64.atan() + 4.0f64.atan()) % PI;
    assert!((two.total_delta() - exact).abs() < 1e-7);

    let xs: Vec<f64> = (0..=40).map(|i| -2.0 + i as f64 * 0.1).collect();
    let lopsided = Potential::tabulated(Table::from_fn(xs, |x| if x > 0.0 { -1.0 } else { 0.0 }).unwrap());
    assert!(matches!(numeric::solve_parity_phases(&lopsided, 1.0, &cfg()), Err(Error::Precondition(_))));
}

#[test]
fn phase_curve_examples() {
    let grid = numeric::default_k_grid();
    let one = numeric::phase_curve(&Potential::reflectionless(1), &grid, &cfg(), PhaseParity::Total).unwrap();
    assert!((one.delta_zero_extrapolated - FRAC_PI_2).abs() < 1e-3);
    let three = numeric::phase_curve(&Potential::reflectionless(3), &grid, &cfg(), PhaseParity::Total).unwrap();
    assert!((three.delta_zero_extrapolated - 1.5 * PI).abs() < 3e-3);
    let zero = numeric::phase_curve(&Potential::zero(), &grid, &cfg(), PhaseParity::Total).unwrap();
    assert!(zero.delta_samples.iter().all(|d| d.abs() < 1e-10));
    for curve in [&one, &three, &zero] {
        assert!(curve.delta_at_kmax().abs() < 0.2);
        assert!(curve.delta_samples.windows(2).all(|w| (w[1] - w[0]).abs() <= FRAC_PI_2));
    }
}

#[test]
fn bound_state_search_examples() {
    let two = numeric::find_bound_states(&Potential::reflectionless(2), &cfg()).unwrap();
    assert_eq!(two.len(), 2);
    assert!((two[0].energy + 4.0).abs() < 1e-8 && (two[1].energy + 1.0).abs() < 1e-8);
    assert_eq!((two[0].parity, two[1].parity), (Parity::Even, Parity::Odd));
    assert!(numeric::find_bound_states(&Potential::reflectionless(0), &cfg()).unwrap().is_empty());
    let four = numeric::find_bound_states(&Potential::reflectionless(4), &cfg()).unwrap();
    for (s, e) in four.iter().zip([-16.0, -9.0, -4.0, -1.0]) {
        assert!((s.energy - e).abs() < 1e-8);
    }
}

#[test]
fn zero_energy_examples() {
    let c = numeric::classify_zero_energy(&Potential::reflectionless(1), &cfg()).unwrap();
    assert!(c.odd_critical && !c.even_critical);
    let c = numeric::classify_zero_energy(&Potential::reflectionless(2), &cfg()).unwrap();
    assert!(c.even_critical && !c.odd_critical);
    let c = numeric::classify_zero_energy(&Potential::zero(), &cfg()).unwrap();
    assert!(c.even_critical && !c.odd_critical);
}

// levinson

#[test]
fn predictor_examples() {
    let p = levinson::predict_direct::<f64>(&analytic::census(0));
    assert_eq!(p.predicted_delta_direct, Some(FRAC_PI_2));
    let p = levinson::predict_direct::<f64>(&analytic::census(1));
    assert_eq!(p.predicted_delta_direct, Some(1.5 * PI));

    let p = levinson::predict_parity::<f64>(&analytic::census(1)).unwrap();
    assert_eq!((p.predicted_delta_even, p.predicted_delta_odd), (Some(PI), Some(FRAC_PI_2)));
    let p = levinson::predict_parity::<f64>(&analytic::census(2)).unwrap();
    assert_eq!((p.predicted_delta_even, p.predicted_delta_odd), (Some(PI), Some(1.5 * PI)));
    let p = levinson::predict_parity::<f64>(&analytic::census(0)).unwrap();
    assert_eq!(p.predicted_delta_even, Some(0.0));
}

#[test]
fn audit_examples() {
    let c = cfg();
    let a = levinson::audit(0, &[Theorem::DirectRestriction], Source::Analytic, &c).unwrap();
    assert_eq!((a[0].prediction.predicted_delta_direct, a[0].actual_delta_zero, a[0].verdict), (Some(FRAC_PI_2), 0.0, Verdict::Contradicts));
    let a = levinson::audit(1, &[Theorem::Parity], Source::Analytic, &c).unwrap();
    assert_eq!((a[0].prediction.predicted_delta_odd, a[0].actual_delta_zero, a[0].verdict), (Some(FRAC_PI_2), FRAC_PI_2, Verdict::Agrees));
    let a = levinson::audit(2, &[Theorem::DirectRestriction], Source::Analytic, &c).unwrap();
    assert_eq!((a[0].prediction.predicted_delta_direct, a[0].actual_delta_zero), (Some(2.5 * PI), PI));
    assert_eq!(a[0].verdict, Verdict::Contradicts);
}

#[test]
fn census_cross_validation() {
    for ell in 0..=4 {
        assert_eq!(levinson::census_for(ell, Source::Both, &cfg()).unwrap(), analytic::census(ell), "ell = {ell}");
    }
}
