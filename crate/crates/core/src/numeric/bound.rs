//! Bound states by shooting, and the zero-energy (half-bound) classifier.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::numerov::{discrete_decay_excess, march};
use super::scattering::parity_seeds;
use super::{require_symmetric, Grid, SolverConfig};
use crate::error::{Error, Result};
use crate::potentials::Potential;
use crate::scalar::Real;
use crate::states::{count_sign_changes, normalize_bound_wave, BoundState, BoundStateCensus, Parity, ReportingGrid};

const NODE_FLOOR: f64 = 1e-10;

/// Which parity sectors carry a bounded zero-energy solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Criticality {
    pub even_critical: bool,
    pub odd_critical: bool,
}

fn column(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// Outward half-line solution with parity `parity` on nodes `0..=last`.
fn outward<T: Real>(g: &[T], h: T, parity: Parity, last: usize) -> Result<Vec<T>> {
    let seeds = parity_seeds(g, h);
    let (psi0, step0) = seeds[column(parity)];
    Ok(march(&g[..=last], h, [psi0], [step0])?.psi.into_iter().map(|[v]| v).collect())
}

/// Solution decaying towards `x_max`, on nodes `first..=N`, indexed from
/// `first`.
fn inward<T: Real>(g: &[T], h: T, kappa: T, first: usize) -> Result<Vec<T>> {
    let excess = discrete_decay_excess(kappa, h);
    let rev: Vec<T> = g[first..].iter().rev().copied().collect();
    let mut psi: Vec<T> = march(&rev, h, [T::one()], [excess])?.psi.into_iter().map(|[v]| v).collect();
    psi.reverse();
    Ok(psi)
}

/// Outermost classically allowed node, kept clear of both ends.
fn matching_index<T: Real>(g: &[T]) -> usize {
    let last = g.len() - 1;
    let m = g.iter().rposition(|&gi| gi < T::zero()).unwrap_or(0);
    m.clamp(1, last - 2)
}

/// Normalized Casoratian of the outward and inward solutions at the
/// matching node. Numerov conserves it exactly, so its sign does not depend
/// on where it is taken; it vanishes exactly at the eigenvalues.
fn mismatch<T: Real>(g: &[T], h: T, parity: Parity, energy: T) -> Result<T> {
    let m = matching_index(g);
    let out = outward(g, h, parity, m + 1)?;
    let inn = inward(g, h, (-energy).sqrt(), m)?;
    let (o0, o1, i0, i1) = (out[m], out[m + 1], inn[0], inn[1]);
    let (no, ni) = (o0.hypot(o1), i0.hypot(i1));
    Ok((o0 / no) * (i1 / ni) - (o1 / no) * (i0 / ni))
}

/// Outward and inward pieces joined at the matching node.
fn spliced<T: Real>(g: &[T], h: T, parity: Parity, energy: T) -> Result<Vec<T>> {
    let m = matching_index(g);
    let mut psi = outward(g, h, parity, m + 1)?;
    let inn = inward(g, h, (-energy).sqrt(), m)?;
    let s = inn[0].hypot(inn[1]);
    let c = (psi[m] * (inn[0] / s) + psi[m + 1] * (inn[1] / s)) / s;
    psi.truncate(m + 1);
    psi.extend(inn[1..].iter().map(|&v| v * c));
    let peak = psi.iter().fold(T::zero(), |a, v| a.max(v.abs()));
    Ok(psi.into_iter().map(|v| v / peak).collect())
}

/// Samples the half-line solution (extended by parity) at `xs`.
fn report<T: Real>(half: &[T], h: T, parity: Parity, xs: &[T]) -> Vec<Complex<T>> {
    let last = half.len() - 1;
    xs.iter()
        .map(|&x| {
            let s = x.abs() / h;
            let j = s.floor().to_usize().unwrap_or(usize::MAX);
            let v = if j >= last {
                if j == last && s == s.floor() {
                    half[last]
                } else {
                    T::zero()
                }
            } else {
                let f = s - s.floor();
                half[j] * (T::one() - f) + half[j + 1] * f
            };
            let sign = if x < T::zero() { parity.sign::<T>() } else { T::one() };
            Complex::new(v * sign, T::zero())
        })
        .collect()
}

struct Level<T> {
    energy: T,
    parity: Parity,
    half: Vec<T>,
    half_nodes: usize,
}

fn sector_levels<T: Real>(grid: &Grid<T>, cfg: &SolverConfig<T>, parity: Parity, vmin: T) -> Result<Vec<Level<T>>> {
    let g_at = |e: T| grid.half_line_g(e);
    let cells = cfg.energy_mesh;
    let width = -vmin / T::from_count(cells);
    let mesh: Vec<T> = (0..cells).map(|i| vmin + (T::from_count(i) + T::lit(0.5)) * width).collect();
    let w: Vec<T> = mesh.par_iter().map(|&e| mismatch(&g_at(e), grid.h, parity, e)).collect::<Result<_>>()?;

    let mut levels = Vec::new();
    for i in 0..cells - 1 {
        if w[i] != T::zero() && w[i].signum() == w[i + 1].signum() {
            continue;
        }
        let (mut lo, mut hi) = (mesh[i], mesh[i + 1]);
        let mut w_lo = w[i];
        if w_lo == T::zero() {
            hi = lo;
        }
        while hi - lo > cfg.energy_tol {
            let mid = (lo + hi) / T::lit(2.0);
            let w_mid = mismatch(&g_at(mid), grid.h, parity, mid)?;
            if w_mid == T::zero() {
                lo = mid;
                hi = mid;
            } else if w_mid.signum() == w_lo.signum() {
                lo = mid;
                w_lo = w_mid;
            } else {
                hi = mid;
            }
        }
        let energy = (lo + hi) / T::lit(2.0);
        let half = spliced(&g_at(energy), grid.h, parity, energy)?;
        let half_nodes = count_sign_changes(half[1..].iter().copied(), T::lit(NODE_FLOOR));
        levels.push(Level { energy, parity, half, half_nodes });
    }
    for (expected, level) in levels.iter().enumerate() {
        if level.half_nodes != expected {
            return Err(Error::Resolution(format!(
                "{parity} level near E = {} has {} nodes on x > 0, expected {expected}; refine the energy mesh",
                level.energy, level.half_nodes
            )));
        }
    }
    // Sturm: the E = 0 solution has one node on x > 0 per level below it,
    // counting the one its straight tail `alpha + beta x` still has beyond
    // x_max unless the sector is critical. This catches levels above the
    // last mesh point.
    let zero = outward(&g_at(T::zero()), grid.h, parity, grid.n)?;
    let mut below_zero = count_sign_changes(zero[1..].iter().copied(), T::lit(NODE_FLOOR));
    let (last, slope) = (zero[grid.n], (zero[grid.n] - zero[grid.n - 1]) / grid.h);
    let alpha = last - slope * cfg.x_max;
    let critical = slope.abs() * cfg.x_max < cfg.zero_energy_slope_tol * alpha.abs();
    if !critical && last * slope < T::zero() {
        below_zero += 1;
    }
    if below_zero != levels.len() {
        return Err(Error::Resolution(format!(
            "{parity} sector has {below_zero} levels below E = 0 but the mesh bracketed {}; refine the energy mesh or widen x_max",
            levels.len()
        )));
    }
    Ok(levels)
}

/// Bound states on the default reporting grid, deepest first.
pub fn find_bound_states<T: Real>(p: &Potential<T>, cfg: &SolverConfig<T>) -> Result<Vec<BoundState<T>>> {
    let grid = ReportingGrid { half_width: cfg.x_max.min(T::lit(20.0)), ..ReportingGrid::default() };
    find_bound_states_on(p, cfg, &grid)
}

pub fn find_bound_states_on<T: Real>(
    p: &Potential<T>,
    cfg: &SolverConfig<T>,
    reporting: &ReportingGrid<T>,
) -> Result<Vec<BoundState<T>>> {
    require_symmetric(p)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    let vmin = grid.vs[grid.n..].iter().copied().fold(T::infinity(), T::min);
    if !(vmin < T::zero()) {
        return Ok(Vec::new());
    }
    let mut levels = sector_levels(&grid, cfg, Parity::Even, vmin)?;
    levels.extend(sector_levels(&grid, cfg, Parity::Odd, vmin)?);
    levels.sort_by(|a, b| a.energy.partial_cmp(&b.energy).expect("finite energies"));

    let xs = reporting.xs();
    let mut states = Vec::with_capacity(levels.len());
    for (n, level) in levels.into_iter().enumerate() {
        let node_count = 2 * level.half_nodes + column(level.parity);
        if node_count != n {
            return Err(Error::Resolution(format!(
                "level {n} at E = {} has {node_count} nodes; a level was missed, refine the energy mesh",
                level.energy
            )));
        }
        let mut psi = report(&level.half, grid.h, level.parity, &xs);
        normalize_bound_wave(&xs, &mut psi);
        states.push(BoundState {
            ell: p.ell(),
            n,
            energy: level.energy,
            parity: level.parity,
            node_count,
            wavefunction: xs.iter().copied().zip(psi).collect(),
        });
    }
    Ok(states)
}

/// Least-squares `alpha + beta x` over the given samples.
fn linear_fit<T: Real>(xs: &[T], ys: &[T]) -> (T, T) {
    let n = T::from_count(xs.len());
    let xbar = xs.iter().fold(T::zero(), |a, &b| a + b) / n;
    let ybar = ys.iter().fold(T::zero(), |a, &b| a + b) / n;
    let (mut sxy, mut sxx) = (T::zero(), T::zero());
    for (&x, &y) in xs.iter().zip(ys) {
        sxy = sxy + (x - xbar) * (y - ybar);
        sxx = sxx + (x - xbar) * (x - xbar);
    }
    let beta = sxy / sxx;
    (ybar - beta * xbar, beta)
}

/// Integrates the even and odd `E = 0` solutions outward and asks whether
/// each tends to a constant rather than growing linearly.
pub fn classify_zero_energy<T: Real>(p: &Potential<T>, cfg: &SolverConfig<T>) -> Result<Criticality> {
    require_symmetric(p)?;
    super::require_decay(p, cfg)?;
    let grid = Grid::new(p, cfg)?;
    grid.check_edges(cfg.match_tol)?;
    let g = grid.half_line_g(T::zero());
    let n = grid.n;
    let tail = (n / 10).max(2);
    let xs: Vec<T> = (n - tail..=n).map(|j| grid.x(grid.n + j)).collect();
    let critical = |parity: Parity| -> Result<bool> {
        let psi = outward(&g, grid.h, parity, n)?;
        let (alpha, beta) = linear_fit(&xs, &psi[n - tail..]);
        let floor = T::lit(1e-300);
        if alpha.abs() < floor && beta.abs() < floor {
            return Err(Error::Degenerate(format!("{parity} zero-energy solution vanishes identically")));
        }
        Ok(beta.abs() * cfg.x_max < cfg.zero_energy_slope_tol * alpha.abs())
    };
    Ok(Criticality { even_critical: critical(Parity::Even)?, odd_critical: critical(Parity::Odd)? })
}

/// Parity-resolved census from the numerical spectrum and criticality.
pub fn numeric_census<T: Real>(p: &Potential<T>, cfg: &SolverConfig<T>) -> Result<BoundStateCensus> {
    let states = find_bound_states(p, cfg)?;
    let crit = classify_zero_energy(p, cfg)?;
    let n_even = states.iter().filter(|s| s.parity == Parity::Even).count();
    Ok(BoundStateCensus {
        n_total: states.len(),
        n_even,
        n_odd: states.len() - n_even,
        critical_even: crit.even_critical,
        critical_odd: crit.odd_critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic;
    use crate::states::trapezoid_norm_sqr;

    #[test]
    fn second_well_levels() {
        let states = find_bound_states(&Potential::<f64>::reflectionless(2), &SolverConfig::<f64>::default()).unwrap();
        let got: Vec<_> = states.iter().map(|s| (s.energy, s.parity, s.node_count)).collect();
        assert_eq!(got.len(), 2);
        assert!((got[0].0 + 4.0).abs() < 1e-8 && (got[1].0 + 1.0).abs() < 1e-8);
        assert_eq!((got[0].1, got[1].1), (Parity::Even, Parity::Odd));
        assert_eq!((got[0].2, got[1].2), (0, 1));
    }

    #[test]
    fn numeric_wavefunction_matches_ladder_construction() {
        let numeric = find_bound_states(&Potential::<f64>::reflectionless(3), &SolverConfig::<f64>::default()).unwrap();
        let exact = analytic::bound_spectrum::<f64>(3);
        for (a, b) in numeric.iter().zip(&exact) {
            let xs: Vec<f64> = a.wavefunction.iter().map(|p| p.0).collect();
            let psi: Vec<_> = a.wavefunction.iter().map(|p| p.1).collect();
            assert!((trapezoid_norm_sqr(&xs, &psi) - 1.0).abs() < 1e-8);
            let err = a.wavefunction.iter().zip(&b.wavefunction).map(|(p, q)| (p.1 - q.1).norm()).fold(0.0, f64::max);
            assert!(err < 1e-6, "level {}: {err}", a.n);
        }
    }

    #[test]
    fn free_particle_has_no_levels_and_a_flat_even_solution() {
        let cfg = SolverConfig::<f64>::default();
        assert!(find_bound_states(&Potential::<f64>::zero(), &cfg).unwrap().is_empty());
        assert!(find_bound_states(&Potential::<f64>::reflectionless(0), &cfg).unwrap().is_empty());
        let c = classify_zero_energy(&Potential::<f64>::zero(), &cfg).unwrap();
        assert_eq!(c, Criticality { even_critical: true, odd_critical: false });
    }

    #[test]
    fn half_bound_sector_follows_ell() {
        let cfg = SolverConfig::<f64>::default();
        for (ell, even) in [(1, false), (2, true)] {
            let c = classify_zero_energy(&Potential::<f64>::reflectionless(ell), &cfg).unwrap();
            assert_eq!(c, Criticality { even_critical: even, odd_critical: !even });
        }
    }

    #[test]
    fn single_precision_spectrum() {
        let cfg = SolverConfig::<f32> { h: 0.01, energy_tol: 1e-5, ..SolverConfig::default() };
        let states = find_bound_states(&Potential::<f32>::reflectionless(2), &cfg).unwrap();
        let energies: Vec<f32> = states.iter().map(|s| s.energy).collect();
        assert_eq!(energies.len(), 2);
        assert!((energies[0] + 4.0).abs() < 1e-4 && (energies[1] + 1.0).abs() < 1e-4);
    }

    #[test]
    fn coarse_mesh_is_reported() {
        let cfg = SolverConfig { energy_mesh: 2, ..SolverConfig::<f64>::default() };
        assert!(matches!(find_bound_states(&Potential::<f64>::reflectionless(5), &cfg), Err(Error::Resolution(_))));
        // The top level of l = 4 sits above the last midpoint of a 3-cell mesh.
        let cfg = SolverConfig { energy_mesh: 3, ..SolverConfig::<f64>::default() };
        assert!(matches!(find_bound_states(&Potential::<f64>::reflectionless(4), &cfg), Err(Error::Resolution(_))));
    }

    #[test]
    fn shallow_level_past_the_box_still_counts() {
        // The odd level sits near -0.01; its zero-energy node lies beyond x_max.
        let xs: Vec<f64> = (-200..=200).map(|i| i as f64 * 0.05).collect();
        let table = crate::potentials::Table::from_fn(xs, |x| -3.0 * (-x * x).exp()).unwrap();
        let p = Potential::tabulated_symmetric(table).unwrap();
        assert_eq!(find_bound_states(&p, &SolverConfig::<f64>::default()).unwrap().len(), 2);
        let cfg = SolverConfig { energy_mesh: 2, ..SolverConfig::<f64>::default() };
        assert!(matches!(find_bound_states(&p, &cfg), Err(Error::Resolution(_))));
    }
}
