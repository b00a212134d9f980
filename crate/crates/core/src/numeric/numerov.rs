//! The Numerov kernel.
//!
//! For `psi'' = g psi` put `w = 1 - h^2 g / 12` and `y = w psi`. Numerov's
//! recursion is `y_{i+1} - 2 y_i + y_{i-1} = h^2 g_i psi_i`; it is run in
//! summed form, carrying `D_i = y_{i+1} - y_i`, which keeps the roundoff of
//! long oscillatory runs two orders of magnitude below the three-term form.

use serde::{Deserialize, Serialize};

use super::{Grid, SolverConfig};
use crate::error::{Error, Result};
use crate::potentials::Potential;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

/// The whole stored solution was multiplied by `factor` when the
/// integration reached `index` (counted in integration order).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Renormalization<T> {
    pub index: usize,
    pub factor: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumerovSolution<T> {
    /// Ascending abscissae.
    pub xs: Vec<T>,
    /// Solution on `xs`, up to the product of the renormalization factors.
    pub psi: Vec<T>,
    pub renormalizations: Vec<Renormalization<T>>,
}

pub(crate) struct Marched<T, const C: usize> {
    pub psi: Vec<[T; C]>,
    pub events: Vec<Renormalization<T>>,
}

/// Runs `C` solutions that share `g` (given in integration order) from
/// `psi_0` and the first increment `psi_1 - psi_0`. Passing the increment
/// rather than `psi_1` keeps seeds accurate when `q h` is tiny, where two
/// rounded neighbouring values would pin down the solution only to
/// `eps / (q h)`. Solutions are rescaled together, so linear combinations
/// across columns stay meaningful.
pub(crate) fn march<T: Real, const C: usize>(g: &[T], h: T, psi0: [T; C], step0: [T; C]) -> Result<Marched<T, C>> {
    assert!(g.len() >= 2, "need at least two nodes");
    let h2 = h * h;
    let twelfth = h2 / T::lit(12.0);
    let weight = |gi: T| -> Result<T> {
        let w = T::one() - twelfth * gi;
        if w > T::zero() {
            Ok(w)
        } else {
            Err(Error::Resolution(format!("step {h} too coarse for |v - E| = {gi}")))
        }
    };
    let limit = T::max_value().sqrt();

    let (w0, w1) = (weight(g[0])?, weight(g[1])?);
    let dw = -twelfth * (g[1] - g[0]);
    let mut psi = Vec::with_capacity(g.len());
    let mut y = [T::zero(); C];
    let mut delta = [T::zero(); C];
    let mut second = [T::zero(); C];
    for c in 0..C {
        second[c] = psi0[c] + step0[c];
        delta[c] = dw * psi0[c] + w1 * step0[c];
        y[c] = w0 * psi0[c] + delta[c];
    }
    psi.push(psi0);
    psi.push(second);
    let mut delta_carry = [T::zero(); C];
    let mut y_carry = [T::zero(); C];
    let mut events = Vec::new();
    for i in 1..g.len() - 1 {
        let current = psi[i];
        let w_next = weight(g[i + 1])?;
        let mut next = [T::zero(); C];
        let mut peak = T::zero();
        for c in 0..C {
            kahan_add(&mut delta[c], &mut delta_carry[c], h2 * g[i] * current[c]);
            kahan_add(&mut y[c], &mut y_carry[c], delta[c]);
            next[c] = y[c] / w_next;
            peak = peak.max(y[c].abs());
        }
        psi.push(next);
        if peak > limit {
            let factor = peak.recip();
            for row in psi.iter_mut() {
                for v in row.iter_mut() {
                    *v = *v * factor;
                }
            }
            for c in 0..C {
                y[c] = y[c] * factor;
                delta[c] = delta[c] * factor;
                y_carry[c] = y_carry[c] * factor;
                delta_carry[c] = delta_carry[c] * factor;
            }
            events.push(Renormalization { index: i + 1, factor });
        }
    }
    Ok(Marched { psi, events })
}

/// Compensated `sum += term`; `carry` holds the low-order bits lost so far.
#[inline]
fn kahan_add<T: Real>(sum: &mut T, carry: &mut T, term: T) {
    let t = term - *carry;
    let next = *sum + t;
    *carry = (next - *sum) - t;
    *sum = next;
}

/// Integrates `psi'' = (v - energy) psi` across the full grid.
///
/// `seed` holds psi at the first two nodes in the direction of travel
/// (`-x_max, -x_max + h` left to right, `x_max, x_max - h` right to left).
pub fn numerov_integrate<T: Real>(
    p: &Potential<T>,
    energy: T,
    direction: Direction,
    cfg: &SolverConfig<T>,
    seed: [T; 2],
) -> Result<NumerovSolution<T>> {
    if !energy.is_finite() || seed.iter().any(|s| !s.is_finite()) {
        return Err(Error::Domain("energy and seed must be finite".into()));
    }
    let grid = Grid::new(p, cfg)?;
    let mut g: Vec<T> = grid.vs.iter().map(|&v| v - energy).collect();
    if direction == Direction::RightToLeft {
        g.reverse();
    }
    let marched = march(&g, grid.h, [seed[0]], [seed[1] - seed[0]])?;
    let mut psi: Vec<T> = marched.psi.into_iter().map(|[v]| v).collect();
    if direction == Direction::RightToLeft {
        psi.reverse();
    }
    Ok(NumerovSolution { xs: grid.xs(), psi, renormalizations: marched.events })
}

/// Wavenumber `q` for which `e^{iqx}` solves the discrete free recursion
/// at energy `k^2` exactly: `sin(qh/2) = (kh/2) / sqrt(1 + (kh)^2/12)`.
pub fn discrete_wavenumber<T: Real>(k: T, h: T) -> T {
    let kh = k * h;
    let two = T::lit(2.0);
    two / h * ((kh / two) / (T::one() + kh * kh / T::lit(12.0)).sqrt()).asin()
}

/// Growth per step towards the origin, minus one, of the discrete
/// solution that decays like `e^{-kappa |x|}` in a field-free region.
pub(crate) fn discrete_decay_excess<T: Real>(kappa: T, h: T) -> T {
    let q = h * h * kappa * kappa;
    let d = q / (T::one() - q / T::lit(12.0));
    d / T::lit(2.0) + (d + d * d / T::lit(4.0)).sqrt()
}
