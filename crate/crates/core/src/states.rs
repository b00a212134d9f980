//! State descriptions shared by the exact and the numerical routes.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity `(-1)^n`.
    pub fn of_index(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign<T: Real>(self) -> T {
        match self {
            Parity::Even => T::one(),
            Parity::Odd => -T::one(),
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A normalizable eigenstate with `E = k^2 < 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundState<T> {
    /// Family index when the potential is reflectionless.
    pub ell: Option<u32>,
    /// Excitation index, 0 for the ground state.
    pub n: usize,
    pub energy: T,
    pub parity: Parity,
    pub node_count: usize,
    /// `(x, psi(x))` on the reporting grid, L2-normalized.
    pub wavefunction: Vec<(T, Complex<T>)>,
}

/// The zero-energy solution that stays bounded but is not square-integrable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfBoundState<T> {
    pub ell: u32,
    pub parity: Parity,
    /// Normalized so that `psi(x) -> 1` as `x -> +inf`.
    pub wavefunction: Vec<(T, Complex<T>)>,
}

/// Bound-state counts per parity plus which sector has a half-bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundStateCensus {
    pub n_total: usize,
    pub n_even: usize,
    pub n_odd: usize,
    pub critical_even: bool,
    pub critical_odd: bool,
}

impl BoundStateCensus {
    pub fn is_critical(&self) -> bool {
        self.critical_even || self.critical_odd
    }
}

/// Symmetric uniform grid on which wavefunctions are reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportingGrid<T> {
    pub half_width: T,
    pub step: T,
}

impl<T: Real> Default for ReportingGrid<T> {
    fn default() -> Self {
        Self { half_width: T::lit(20.0), step: T::lit(0.01) }
    }
}

impl<T: Real> ReportingGrid<T> {
    pub fn xs(&self) -> Vec<T> {
        let n = (self.half_width / self.step).round().to_i64().expect("grid size fits");
        (-n..=n).map(|i| T::from_i64(i).expect("index fits") * self.step).collect()
    }
}

/// Trapezoidal `integral |psi|^2 dx` on sorted abscissae.
pub fn trapezoid_norm_sqr<T: Real>(xs: &[T], psi: &[Complex<T>]) -> T {
    xs.windows(2)
        .zip(psi.windows(2))
        .map(|(x, p)| (x[1] - x[0]) * (p[0].norm_sqr() + p[1].norm_sqr()) / T::lit(2.0))
        .fold(T::zero(), |a, b| a + b)
}

/// L2-normalizes `psi` and fixes its global phase: real, and positive at the
/// first `x > 0` where `|psi|` is largest.
pub fn normalize_bound_wave<T: Real>(xs: &[T], psi: &mut [Complex<T>]) {
    let norm = trapezoid_norm_sqr(xs, psi).sqrt();
    let mut best: Option<(usize, T)> = None;
    for (i, (&x, p)) in xs.iter().zip(psi.iter()).enumerate() {
        if x > T::zero() && best.is_none_or(|(_, m)| p.norm() > m) {
            best = Some((i, p.norm()));
        }
    }
    let phase = match best {
        Some((i, m)) if m > T::zero() => psi[i].unscale(m),
        _ => Complex::new(T::one(), T::zero()),
    };
    let factor = phase.conj().unscale(norm);
    for p in psi.iter_mut() {
        *p = *p * factor;
    }
}

/// Sign changes of a real profile, ignoring samples below
/// `rel_floor * max|f|` (tails and exact zeros).
pub fn count_sign_changes<T: Real>(values: impl IntoIterator<Item = T> + Clone, rel_floor: T) -> usize {
    let max = values.clone().into_iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let floor = rel_floor * max;
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for v in values {
        if v.abs() <= floor {
            continue;
        }
        let positive = v > T::zero();
        if last.is_some_and(|l| l != positive) {
            changes += 1;
        }
        last = Some(positive);
    }
    changes
}
