//! Bound and half-bound states of the reflectionless family.
//!
//! Level `n` of `H_l` is obtained from the node-less ground state
//! `sech^{l-n}` of `H_{l-n}` by raising with indices `l-n+1, ..., l`; each
//! raising keeps the energy `-(l-n)^2` and adds one node.

use num_complex::Complex;

use super::ladder::LadderWave;
use crate::scalar::Real;
use crate::states::{
    count_sign_changes, normalize_bound_wave, BoundState, BoundStateCensus, HalfBoundState, Parity, ReportingGrid,
};

const NODE_FLOOR: f64 = 1e-10;

/// Closed form of level `n` of `H_ell` (not normalized).
pub fn bound_wave<T: Real>(ell: u32, n: u32) -> LadderWave<T> {
    assert!(n < ell, "level {n} does not exist for ell = {ell}");
    ((ell - n + 1)..=ell).fold(LadderWave::sech_power(ell - n), |w, j| w.raise(j))
}

fn build_level<T: Real>(ell: u32, n: u32, grid: &ReportingGrid<T>) -> BoundState<T> {
    let xs = grid.xs();
    let mut psi = bound_wave::<T>(ell, n).sample(&xs);
    normalize_bound_wave(&xs, &mut psi);
    let node_count = count_sign_changes(psi.iter().map(|p| p.re), T::lit(NODE_FLOOR));
    let depth = T::from_u32(ell - n).expect("small index");
    BoundState {
        ell: Some(ell),
        n: n as usize,
        energy: -depth * depth,
        parity: Parity::of_index(n as usize),
        node_count,
        wavefunction: xs.into_iter().zip(psi).collect(),
    }
}

/// `sech^ell x`, normalized, at energy `-ell^2`. `None` for `ell = 0`,
/// which has no bound state.
pub fn ground_state<T: Real>(ell: u32) -> Option<BoundState<T>> {
    ground_state_on(ell, &ReportingGrid::default())
}

pub fn ground_state_on<T: Real>(ell: u32, grid: &ReportingGrid<T>) -> Option<BoundState<T>> {
    (ell > 0).then(|| build_level(ell, 0, grid))
}

/// All `ell` bound states, deepest first.
pub fn bound_spectrum<T: Real>(ell: u32) -> Vec<BoundState<T>> {
    bound_spectrum_on(ell, &ReportingGrid::default())
}

pub fn bound_spectrum_on<T: Real>(ell: u32, grid: &ReportingGrid<T>) -> Vec<BoundState<T>> {
    (0..ell).map(|n| build_level(ell, n, grid)).collect()
}

/// Closed form of the zero-energy state, scaled so that it tends to 1 as
/// `x -> +inf`.
pub fn half_bound_wave<T: Real>(ell: u32) -> LadderWave<T> {
    let w = (1..=ell).fold(LadderWave::plane_wave(T::zero()), |w, j| w.raise(j));
    let limit = w.right_amplitude();
    w.scaled(Complex::new(T::one(), T::zero()) / limit)
}

pub fn half_bound_state<T: Real>(ell: u32) -> HalfBoundState<T> {
    half_bound_state_on(ell, &ReportingGrid::default())
}

pub fn half_bound_state_on<T: Real>(ell: u32, grid: &ReportingGrid<T>) -> HalfBoundState<T> {
    let xs = grid.xs();
    let psi = half_bound_wave::<T>(ell).sample(&xs);
    HalfBoundState { ell, parity: Parity::of_index(ell as usize), wavefunction: xs.into_iter().zip(psi).collect() }
}

/// Parity-resolved bound-state counts and the sector of the half-bound state.
pub fn census(ell: u32) -> BoundStateCensus {
    let levels = ell as usize;
    let n_even = (0..levels).filter(|&n| Parity::of_index(n) == Parity::Even).count();
    let half = Parity::of_index(levels);
    BoundStateCensus {
        n_total: levels,
        n_even,
        n_odd: levels - n_even,
        critical_even: half == Parity::Even,
        critical_odd: half == Parity::Odd,
    }
}
