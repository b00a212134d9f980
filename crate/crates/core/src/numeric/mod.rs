//! General even-potential solver built on Numerov's method: scattering
//! amplitudes, parity-resolved phase shifts, phase curves with a
//! zero-momentum extrapolation, bound states by shooting and zero-energy
//! criticality.
//!
//! Everything runs on the symmetric grid `x_i = (i - N) h`, `N = x_max / h`,
//! so that `x = 0` is a node and the half-line problems use nodes
//! `N..=2N`.

mod bound;
mod curve;
mod numerov;
mod scattering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potentials::{check_decay_condition, Potential, MIN_DECAY_PROBE};
use crate::scalar::Real;

pub use bound::{classify_zero_energy, find_bound_states, find_bound_states_on, numeric_census, Criticality};
pub use curve::{default_k_grid, geometric_grid, phase_curve, phase_curve_on, phase_sweep, PhaseParity, PhaseShiftCurve};
pub use numerov::{discrete_wavenumber, numerov_integrate, Direction, NumerovSolution, Renormalization};
pub use scattering::{scattering_sweep, solve_parity_phases, solve_scattering, ParityPhases, ScatteringResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig<T> {
    /// Half-width of the integration domain.
    pub x_max: T,
    /// Grid step.
    pub h: T,
    /// Largest `|v|` tolerated at the matching points `+-x_max`.
    pub match_tol: T,
    /// Width at which bound-state bisection stops.
    pub energy_tol: T,
    /// Threshold on `|beta| x_max / |alpha|` below which a zero-energy
    /// solution counts as bounded.
    pub zero_energy_slope_tol: T,
    /// Cells of the energy mesh used to bracket bound states.
    pub energy_mesh: usize,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            x_max: T::lit(20.0),
            h: T::lit(1e-3),
            match_tol: T::lit(1e-9),
            energy_tol: T::lit(1e-10),
            zero_energy_slope_tol: T::lit(1e-6),
            energy_mesh: 400,
        }
    }
}

impl<T: Real> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_max >= T::lit(10.0)) || !self.x_max.is_finite() {
            return Err(Error::Domain(format!("x_max must be at least 10, got {}", self.x_max)));
        }
        if !(self.h > T::zero() && self.h <= T::lit(0.01)) {
            return Err(Error::Domain(format!("step must lie in (0, 0.01], got {}", self.h)));
        }
        for (name, tol) in [
            ("match_tol", self.match_tol),
            ("energy_tol", self.energy_tol),
            ("zero_energy_slope_tol", self.zero_energy_slope_tol),
        ] {
            if !(tol > T::zero()) || !tol.is_finite() {
                return Err(Error::Domain(format!("{name} must be positive, got {tol}")));
            }
        }
        if self.energy_mesh < 2 {
            return Err(Error::Domain(format!("energy mesh needs at least 2 cells, got {}", self.energy_mesh)));
        }
        Ok(())
    }

    /// Nodes on the positive half-line, excluding the origin.
    pub fn half_nodes(&self) -> usize {
        (self.x_max / self.h).round().to_usize().expect("grid size fits")
    }
}

/// Potential sampled once on the full grid.
#[derive(Debug, Clone)]
pub(crate) struct Grid<T> {
    pub h: T,
    pub n: usize,
    pub vs: Vec<T>,
}

impl<T: Real> Grid<T> {
    pub fn new(p: &Potential<T>, cfg: &SolverConfig<T>) -> Result<Self> {
        cfg.validate()?;
        let n = cfg.half_nodes();
        let h = cfg.h;
        let vs = (0..=2 * n).map(|i| p.value(node(i, n, h))).collect();
        Ok(Self { h, n, vs })
    }

    pub fn x(&self, i: usize) -> T {
        node(i, self.n, self.h)
    }

    pub fn xs(&self) -> Vec<T> {
        (0..self.vs.len()).map(|i| self.x(i)).collect()
    }

    /// `v - E` on nodes `N..=2N` (the half-line, origin first).
    pub fn half_line_g(&self, energy: T) -> Vec<T> {
        self.vs[self.n..].iter().map(|&v| v - energy).collect()
    }

    /// The potential must have died off where the asymptotic forms are
    /// matched.
    pub fn check_edges(&self, match_tol: T) -> Result<()> {
        let edge = self.vs[0].abs().max(self.vs[2 * self.n].abs());
        if edge > match_tol {
            return Err(Error::Precondition(format!(
                "|v| = {edge:e} at the matching points exceeds match_tol; increase x_max"
            )));
        }
        Ok(())
    }
}

fn node<T: Real>(i: usize, n: usize, h: T) -> T {
    (T::from_count(i) - T::from_count(n)) * h
}

/// Decay check on probes spread over the outer half of the domain.
pub(crate) fn require_decay<T: Real>(p: &Potential<T>, cfg: &SolverConfig<T>) -> Result<()> {
    let lo = T::lit(MIN_DECAY_PROBE).max(cfg.x_max / T::lit(2.0));
    let probes: Vec<T> = (0..5).map(|i| lo + (cfg.x_max - lo) * T::from_count(i) / T::lit(4.0)).collect();
    let report = check_decay_condition(p, &probes)?;
    if !report.passes {
        return Err(Error::Precondition(format!(
            "potential fails the asymptotic decay check (max x^2|v| = {:e})",
            report.max_tail
        )));
    }
    Ok(())
}

pub(crate) fn require_symmetric<T: Real>(p: &Potential<T>) -> Result<()> {
    if !p.is_symmetric() {
        return Err(Error::Precondition("parity-resolved solvers need an even potential".into()));
    }
    Ok(())
}

pub(crate) fn require_positive_k<T: Real>(k: T) -> Result<()> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::Domain(format!("momentum must be positive and finite, got {k}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let ok = SolverConfig::<f64>::default();
        assert!(ok.validate().is_ok());
        assert_eq!(ok.half_nodes(), 20_000);
        for bad in [
            SolverConfig { x_max: 5.0, ..ok },
            SolverConfig { h: 0.02, ..ok },
            SolverConfig { h: 0.0, ..ok },
            SolverConfig { energy_tol: 0.0, ..ok },
            SolverConfig { match_tol: -1.0, ..ok },
            SolverConfig { energy_mesh: 1, ..ok },
        ] {
            assert!(matches!(bad.validate(), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn grid_has_origin_node() {
        let cfg = SolverConfig::<f64> { x_max: 10.0, h: 0.01, ..Default::default() };
        let g = Grid::new(&Potential::reflectionless(1), &cfg).unwrap();
        assert_eq!(g.x(g.n), 0.0);
        assert_eq!(g.vs[g.n], -2.0);
        assert_eq!(g.vs.len(), 2001);
    }
}
