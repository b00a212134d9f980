//! Continuous phase-shift curves and the zero-momentum limit.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scattering::{parity_phases_on_grid, scatter_on_grid};
use super::{require_decay, require_positive_k, require_symmetric, Grid, SolverConfig};
use crate::error::{Error, Result};
use crate::phase::{anchor_last_near_zero, extrapolate_to_zero, max_adjacent_jump, unwrap_by_continuity};
use crate::potentials::Potential;
use crate::scalar::Real;

pub const CURVE_MIN_K: f64 = 0.01;
pub const CURVE_MIN_KMAX: f64 = 20.0;
pub const CURVE_MIN_SAMPLES: usize = 50;

/// Default sweep: 200 geometric samples on `[0.01, 100]`. The upper end
/// sits far enough out that deep wells have `|delta(k_max)|` well below
/// `pi/2`, which the branch anchor needs.
pub fn default_k_grid<T: Real>() -> Vec<T> {
    geometric_grid(T::lit(0.01), T::lit(100.0), 200)
}

/// `n` points from `lo` to `hi` with a constant ratio; the endpoints are
/// exact.
pub fn geometric_grid<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    assert!(n >= 2, "a grid needs two points");
    let ratio = (hi / lo).ln() / T::from_count(n - 1);
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => lo * (ratio * T::from_count(i)).exp(),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhaseParity {
    Total,
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftCurve<T> {
    pub parity: PhaseParity,
    pub k_samples: Vec<T>,
    /// Unwrapped, anchored so that the last sample lies in `(-pi/2, pi/2]`.
    pub delta_samples: Vec<T>,
    pub delta_zero_extrapolated: T,
}

impl<T: Real> PhaseShiftCurve<T> {
    /// Builds a curve from phases known modulo `pi`, without the range
    /// requirements of [`phase_curve`].
    pub fn from_wrapped(parity: PhaseParity, k_samples: Vec<T>, wrapped: &[T]) -> Result<Self> {
        if k_samples.len() != wrapped.len() || k_samples.len() < 3 {
            return Err(Error::Domain("need at least three (k, delta) pairs".into()));
        }
        let mut delta_samples = unwrap_by_continuity(wrapped, T::PI());
        let jump = max_adjacent_jump(&delta_samples);
        if jump >= T::FRAC_PI_2() * T::lit(0.999) {
            return Err(Error::Resolution(format!(
                "phase jumps by {jump} between neighbouring momenta; use a denser k grid"
            )));
        }
        anchor_last_near_zero(&mut delta_samples, T::PI());
        let delta_zero_extrapolated = extrapolate_to_zero(
            [k_samples[0], k_samples[1], k_samples[2]],
            [delta_samples[0], delta_samples[1], delta_samples[2]],
        );
        Ok(Self { parity, k_samples, delta_samples, delta_zero_extrapolated })
    }

    pub fn delta_at_kmax(&self) -> T {
        *self.delta_samples.last().expect("non-empty curve")
    }
}

/// Phase shifts modulo `pi` (in `[0, pi)`) at each `k`, solved in parallel.
pub fn phase_sweep<T: Real>(p: &Potential<T>, ks: &[T], cfg: &SolverConfig<T>, parity: PhaseParity) -> Result<Vec<T>> {
    ks.iter().try_for_each(|&k| require_positive_k(k))?;
    if parity != PhaseParity::Total {
        require_symmetric(p)?;
    }
    require_decay(p, cfg)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    ks.par_iter()
        .map(|&k| match parity {
            PhaseParity::Total => scatter_on_grid(&grid, k).map(|r| r.delta),
            PhaseParity::Even => parity_phases_on_grid(&grid, k).map(|ph| ph.delta_even),
            PhaseParity::Odd => parity_phases_on_grid(&grid, k).map(|ph| ph.delta_odd),
        })
        .collect()
}

/// Continuous `delta(k)` on `k_grid` plus its `k -> 0` extrapolation.
pub fn phase_curve<T: Real>(
    p: &Potential<T>,
    k_grid: &[T],
    cfg: &SolverConfig<T>,
    parity: PhaseParity,
) -> Result<PhaseShiftCurve<T>> {
    if k_grid.len() < CURVE_MIN_SAMPLES {
        return Err(Error::Domain(format!("need at least {CURVE_MIN_SAMPLES} momenta, got {}", k_grid.len())));
    }
    if k_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("momenta must be strictly increasing".into()));
    }
    let (lo, hi) = (k_grid[0], k_grid[k_grid.len() - 1]);
    if lo < T::lit(CURVE_MIN_K) || hi < T::lit(CURVE_MIN_KMAX) {
        return Err(Error::Domain(format!(
            "momenta must span at least [{CURVE_MIN_K}, {CURVE_MIN_KMAX}], got [{lo}, {hi}]"
        )));
    }
    let wrapped = phase_sweep(p, k_grid, cfg, parity)?;
    PhaseShiftCurve::from_wrapped(parity, k_grid.to_vec(), &wrapped)
}

/// Continuous `delta(k)` on an arbitrary increasing sweep. The phase is
/// followed on a hidden refinement that is nowhere coarser than the default
/// grid and continues geometrically up to `k = 100`, where the branch is
/// fixed; only the requested momenta are reported. Sparse sweeps such as
/// four points on `[0.05, 10]` therefore still land on the right multiple
/// of `pi`. The `k -> 0` limit comes from the three smallest hidden samples.
pub fn phase_curve_on<T: Real>(
    p: &Potential<T>,
    ks: &[T],
    cfg: &SolverConfig<T>,
    parity: PhaseParity,
) -> Result<PhaseShiftCurve<T>> {
    if ks.len() < 2 {
        return Err(Error::Domain(format!("need at least two momenta, got {}", ks.len())));
    }
    if ks.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("momenta must be strictly increasing".into()));
    }
    if ks[0] < T::lit(CURVE_MIN_K) {
        return Err(Error::Domain(format!("smallest momentum must be at least {CURVE_MIN_K}, got {}", ks[0])));
    }
    let log_ratio = (T::lit(1e4)).ln() / T::lit(199.0);
    let fill = |lo: T, hi: T, out: &mut Vec<T>| {
        let parts = ((hi / lo).ln() / log_ratio).ceil().to_usize().unwrap_or(1).max(1);
        let step = (hi / lo).ln() / T::from_count(parts);
        out.extend((1..parts).map(|i| lo * (step * T::from_count(i)).exp()));
        out.push(hi);
    };
    let mut full = vec![ks[0]];
    let mut picks = vec![0];
    for w in ks.windows(2) {
        fill(w[0], w[1], &mut full);
        picks.push(full.len() - 1);
    }
    let top = T::lit(100.0);
    let last = full[full.len() - 1];
    if last < top {
        fill(last, top, &mut full);
    }
    let wrapped = phase_sweep(p, &full, cfg, parity)?;
    let dense = PhaseShiftCurve::from_wrapped(parity, full, &wrapped)?;
    Ok(PhaseShiftCurve {
        parity,
        k_samples: ks.to_vec(),
        delta_samples: picks.iter().map(|&i| dense.delta_samples[i]).collect(),
        delta_zero_extrapolated: dense.delta_zero_extrapolated,
    })
}
