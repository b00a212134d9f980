//! Scattering amplitudes and parity-resolved phases by Numerov integration.
//!
//! Both solvers match to the discrete plane waves `e^{+-iqx}` of the free
//! recursion (see [`discrete_wavenumber`]), so the free propagation between
//! the well and `x_max` carries no discretization error at all.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::numerov::{discrete_wavenumber, march};
use super::{require_decay, require_positive_k, require_symmetric, Grid, SolverConfig};
use crate::analytic::ScatteringCoefficients;
use crate::error::Result;
use crate::phase::reduce_mod;
use crate::potentials::Potential;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringResult<T> {
    pub k: T,
    /// Normalized to unit incident amplitude.
    pub coefficients: ScatteringCoefficients<T>,
    /// `arg(T/I) / 2` in `[0, pi)`.
    pub delta: T,
    pub reflection_probability: T,
    pub transmission_probability: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParityPhases<T> {
    pub k: T,
    /// In `[0, pi)`.
    pub delta_even: T,
    /// In `[0, pi)`.
    pub delta_odd: T,
}

impl<T: Real> ParityPhases<T> {
    /// `(R/I, T/I)` rebuilt as `(e^{2i de} -+ e^{2i do}) / 2`.
    pub fn reconstruct(&self) -> (Complex<T>, Complex<T>) {
        let two = T::lit(2.0);
        let e = Complex::cis(two * self.delta_even);
        let o = Complex::cis(two * self.delta_odd);
        ((e - o).unscale(two), (e + o).unscale(two))
    }

    /// `arg(T/I) / 2` of the reconstructed amplitudes, in `[0, pi)`.
    pub fn total_delta(&self) -> T {
        reduce_mod(self.reconstruct().1.arg() / T::lit(2.0), T::PI())
    }
}

/// Node separation for the two-point matches: about one unit of length,
/// but never more than a quarter wavelength, so that `sin(q d)` stays far
/// from zero. Adjacent nodes would make the 2x2 systems ill-conditioned by
/// `1 / (q h)` at small momenta.
fn match_offset<T: Real>(q: T, h: T, n: usize) -> usize {
    let span = T::one().min(T::FRAC_PI_2() / q);
    (span / h).floor().to_usize().unwrap_or(1).clamp(1, n / 2)
}

pub(crate) fn scatter_on_grid<T: Real>(grid: &Grid<T>, k: T) -> Result<ScatteringResult<T>> {
    let q = discrete_wavenumber(k, grid.h);
    let last = 2 * grid.n;
    let wave = |i: usize| Complex::cis(q * grid.x(i));
    let g: Vec<T> = grid.vs.iter().rev().map(|&v| v - k * k).collect();
    // e^{-iqh} - 1 = -2i sin(qh/2) e^{-iqh/2}, without cancellation.
    let half = q * grid.h / T::lit(2.0);
    let s0 = wave(last);
    let step = s0 * Complex::new(T::zero(), -T::lit(2.0) * half.sin()) * Complex::cis(-half);
    let marched = march(&g, grid.h, [s0.re, s0.im], [step.re, step.im])?;
    // The stored solution is `scale` times the one with T = 1.
    let scale = marched.events.iter().fold(T::one(), |acc, e| acc * e.factor);
    let at = |row: [T; 2]| Complex::new(row[0], row[1]);
    let d = match_offset(q, grid.h, grid.n);
    let (psi0, psi1) = (at(marched.psi[last]), at(marched.psi[last - d]));

    // psi = I a + R / a at x_0, x_d with a_j = e^{iq x_j}.
    let a0 = wave(0);
    let a1 = a0 * Complex::cis(q * grid.h * T::from_count(d));
    let det = a0 / a1 - a1 / a0;
    let incident = (psi0 / a1 - psi1 / a0) / det;
    let reflected = (a0 * psi1 - a1 * psi0) / det;
    let r = reflected / incident;
    let t = Complex::new(scale, T::zero()) / incident;
    let coefficients = ScatteringCoefficients { k, incident: Complex::new(T::one(), T::zero()), reflected: r, transmitted: t };
    Ok(ScatteringResult {
        k,
        coefficients,
        delta: coefficients.half_arg(),
        reflection_probability: r.norm_sqr(),
        transmission_probability: t.norm_sqr(),
    })
}

/// Sends a unit wave in from the left and reads `I`, `R`, `T` off the
/// asymptotic regions.
pub fn solve_scattering<T: Real>(p: &Potential<T>, k: T, cfg: &SolverConfig<T>) -> Result<ScatteringResult<T>> {
    require_positive_k(k)?;
    require_decay(p, cfg)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    scatter_on_grid(&grid, k)
}

/// [`solve_scattering`] over many momenta, in parallel; output follows `ks`.
pub fn scattering_sweep<T: Real>(p: &Potential<T>, ks: &[T], cfg: &SolverConfig<T>) -> Result<Vec<ScatteringResult<T>>> {
    ks.iter().try_for_each(|&k| require_positive_k(k))?;
    require_decay(p, cfg)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    ks.par_iter().map(|&k| scatter_on_grid(&grid, k)).collect()
}

/// Phase `phi` of `A sin(qx) + B cos(qx) = a sin(qx + phi)` fitted at
/// nodes `2N - d` and `2N`.
fn asymptotic_phase<T: Real>(grid: &Grid<T>, q: T, d: usize, psi_prev: T, psi_last: T) -> T {
    let (x1, x2) = (grid.x(2 * grid.n - d), grid.x(2 * grid.n));
    let (s1, c1) = (q * x1).sin_cos();
    let (s2, c2) = (q * x2).sin_cos();
    let det = s1 * c2 - s2 * c1;
    let a = (psi_prev * c2 - psi_last * c1) / det;
    let b = (s1 * psi_last - s2 * psi_prev) / det;
    b.atan2(a)
}

pub(crate) fn parity_phases_on_grid<T: Real>(grid: &Grid<T>, k: T) -> Result<ParityPhases<T>> {
    let q = discrete_wavenumber(k, grid.h);
    let g = grid.half_line_g(k * k);
    let [even, odd] = parity_seeds(&g, grid.h);
    let marched = march(&g, grid.h, [even.0, odd.0], [even.1, odd.1])?;
    let n = grid.n;
    let d = match_offset(q, grid.h, n);
    let (prev, last) = (marched.psi[n - d], marched.psi[n]);
    let phi_even = asymptotic_phase(grid, q, d, prev[0], last[0]);
    let phi_odd = asymptotic_phase(grid, q, d, prev[1], last[1]);
    Ok(ParityPhases {
        k,
        delta_even: reduce_mod(phi_even - T::FRAC_PI_2(), T::PI()),
        delta_odd: reduce_mod(phi_odd, T::PI()),
    })
}

/// `(psi_0, psi_1 - psi_0)` of the discrete even and odd solutions.
///
/// The even seed is exact for the recursion (`y_{-1} = y_1`, so
/// `y_1 - y_0 = h^2 g_0 / 2`); the odd one only fixes a scale, since
/// `psi_0 = 0` already determines the solution.
pub(crate) fn parity_seeds<T: Real>(g: &[T], h: T) -> [(T, T); 2] {
    let h2 = h * h;
    let twelfth = h2 / T::lit(12.0);
    let w1 = T::one() - twelfth * g[1];
    // y_1 - y_0 = (w_1 - w_0) psi_0 + w_1 (psi_1 - psi_0)
    let even_step = (h2 * g[0] / T::lit(2.0) + twelfth * (g[1] - g[0])) / w1;
    [(T::one(), even_step), (T::zero(), h)]
}

/// Even and odd phase shifts from the half-line problems with
/// `psi'(0) = 0` and `psi(0) = 0`.
pub fn solve_parity_phases<T: Real>(p: &Potential<T>, k: T, cfg: &SolverConfig<T>) -> Result<ParityPhases<T>> {
    require_positive_k(k)?;
    require_symmetric(p)?;
    require_decay(p, cfg)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    parity_phases_on_grid(&grid, k)
}
