//! Ladder operators and Hamiltonians acting on sampled wavefunctions.
//!
//! Closed-form inputs are differentiated exactly; sampled inputs use
//! fourth-order finite differences, with a Richardson estimate of the
//! derivative error guarding against grids that are too coarse.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::ladder::LadderWave;
use crate::error::{Error, Result};
use crate::potentials::sech_squared;
use crate::scalar::Real;

/// Relative derivative accuracy demanded of sampled inputs by default.
pub const DEFAULT_FD_TOLERANCE: f64 = 1e-6;

/// Index `l >= 1` of `a_l = p - i l tanh x` and `a_l^+ = p + i l tanh x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LadderIndex(u32);

impl LadderIndex {
    pub fn new(ell: u32) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Domain("ladder index must be at least 1".into()));
        }
        Ok(Self(ell))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Complex samples on the uniform grid `x_i = x0 + i h`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction<T> {
    pub x0: T,
    pub h: T,
    pub values: Vec<Complex<T>>,
}

impl<T: Real> SampledFunction<T> {
    pub fn from_fn(x0: T, h: T, n: usize, f: impl Fn(T) -> Complex<T>) -> Self {
        let values = (0..n).map(|i| f(x0 + T::from_count(i) * h)).collect();
        Self { x0, h, values }
    }

    /// Uniform grid covering `[lo, hi]` with step close to `h`.
    pub fn on_interval(lo: T, hi: T, h: T, f: impl Fn(T) -> Complex<T>) -> Self {
        let n = ((hi - lo) / h).round().to_usize().expect("grid size fits");
        let step = (hi - lo) / T::from_count(n);
        Self::from_fn(lo, step, n + 1, f)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, i: usize) -> T {
        self.x0 + T::from_count(i) * self.h
    }

    pub fn xs(&self) -> Vec<T> {
        (0..self.len()).map(|i| self.x(i)).collect()
    }

    pub fn sup_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.norm()))
    }

    fn with_values(&self, values: Vec<Complex<T>>) -> Self {
        Self { x0: self.x0, h: self.h, values }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.with_values(self.values.iter().zip(&other.values).map(|(&a, &b)| a - b).collect())
    }

    /// Fourth-order first derivative: central in the interior, one-sided
    /// five-point stencils at the two outermost nodes on each side.
    pub fn derivative(&self) -> Result<Self> {
        let n = self.len();
        if n < 5 {
            return Err(Error::Resolution(format!("need at least 5 samples to differentiate, got {n}")));
        }
        let f = &self.values;
        let c = |v: f64| T::lit(v);
        let denom = c(12.0) * self.h;
        let mut out = Vec::with_capacity(n);
        let forward0 = |f: &[Complex<T>], s: T| (f[0] * c(-25.0) + f[1] * c(48.0) - f[2] * c(36.0) + f[3] * c(16.0) - f[4] * c(3.0)) * s;
        let forward1 = |f: &[Complex<T>], s: T| (f[0] * c(-3.0) - f[1] * c(10.0) + f[2] * c(18.0) - f[3] * c(6.0) + f[4]) * s;
        let rev: Vec<Complex<T>> = f[n - 5..].iter().rev().copied().collect();
        for i in 0..n {
            let d = match i {
                0 => forward0(f, T::one()),
                1 => forward1(f, T::one()),
                i if i == n - 1 => forward0(&rev, -T::one()),
                i if i == n - 2 => forward1(&rev, -T::one()),
                i => f[i - 2] - f[i - 1] * c(8.0) + f[i + 1] * c(8.0) - f[i + 2],
            };
            out.push(d / denom);
        }
        Ok(self.with_values(out))
    }

    /// Fourth-order second derivative, six-point one-sided at the edges.
    pub fn second_derivative(&self) -> Result<Self> {
        let n = self.len();
        if n < 6 {
            return Err(Error::Resolution(format!("need at least 6 samples for a second derivative, got {n}")));
        }
        let f = &self.values;
        let c = |v: f64| T::lit(v);
        let denom = c(12.0) * self.h * self.h;
        let edge0 = |f: &[Complex<T>]| f[0] * c(45.0) - f[1] * c(154.0) + f[2] * c(214.0) - f[3] * c(156.0) + f[4] * c(61.0) - f[5] * c(10.0);
        let edge1 = |f: &[Complex<T>]| f[0] * c(10.0) - f[1] * c(15.0) - f[2] * c(4.0) + f[3] * c(14.0) - f[4] * c(6.0) + f[5];
        let rev: Vec<Complex<T>> = f[n - 6..].iter().rev().copied().collect();
        let out = (0..n)
            .map(|i| {
                let d = match i {
                    0 => edge0(f),
                    1 => edge1(f),
                    i if i == n - 1 => edge0(&rev),
                    i if i == n - 2 => edge1(&rev),
                    i => -f[i - 2] + f[i - 1] * c(16.0) - f[i] * c(30.0) + f[i + 1] * c(16.0) - f[i + 2],
                };
                d / denom
            })
            .collect();
        Ok(self.with_values(out))
    }

    /// Estimated sup-norm error of [`Self::derivative`] from comparing the
    /// interior stencil at steps `h` and `2h`.
    pub fn derivative_error_estimate(&self) -> Result<T> {
        let d = self.derivative()?;
        let f = &self.values;
        let n = self.len();
        if n < 9 {
            return Ok(T::infinity());
        }
        let denom = T::lit(24.0) * self.h;
        let est = (4..n - 4)
            .map(|i| {
                let coarse = (f[i - 4] - f[i - 2] * T::lit(8.0) + f[i + 2] * T::lit(8.0) - f[i + 4]) / denom;
                (d.values[i] - coarse).norm() / T::lit(15.0)
            })
            .fold(T::zero(), T::max);
        Ok(est)
    }

    /// Derivative that fails when the estimated error exceeds
    /// `rel_tol * max(|f'|, |f| / span)`.
    pub fn checked_derivative(&self, rel_tol: T) -> Result<Self> {
        let d = self.derivative()?;
        let span = self.h * T::from_count(self.len().saturating_sub(1));
        let scale = d.sup_norm().max(self.sup_norm() / span);
        if scale == T::zero() {
            return Ok(d);
        }
        let err = self.derivative_error_estimate()?;
        if err > rel_tol * scale {
            return Err(Error::Tolerance(format!(
                "grid step {} too coarse: derivative error estimate {err:e} exceeds {:e}",
                self.h,
                rel_tol * scale
            )));
        }
        Ok(d)
    }
}

/// Either an exact closed form or plain samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wavefunction<T> {
    Closed(LadderWave<T>),
    Sampled(SampledFunction<T>),
}

impl<T: Real> Wavefunction<T> {
    pub fn sample(&self, xs: &[T]) -> Option<Vec<Complex<T>>> {
        match self {
            Wavefunction::Closed(w) => Some(w.sample(xs)),
            Wavefunction::Sampled(_) => None,
        }
    }
}

fn ladder_sampled<T: Real>(ell: T, f: &SampledFunction<T>, rel_tol: T) -> Result<SampledFunction<T>> {
    let i = Complex::new(T::zero(), T::one());
    let d = f.checked_derivative(rel_tol)?;
    Ok(d.with_values(
        d.values
            .iter()
            .zip(&f.values)
            .enumerate()
            .map(|(n, (&dv, &v))| -i * dv + i * v * (ell * f.x(n).tanh()))
            .collect(),
    ))
}

/// `a_l^+ f = -i f' + i l tanh(x) f`.
pub fn apply_raising<T: Real>(index: LadderIndex, f: &Wavefunction<T>) -> Result<Wavefunction<T>> {
    apply_raising_with_tolerance(index, f, T::lit(DEFAULT_FD_TOLERANCE))
}

pub fn apply_raising_with_tolerance<T: Real>(index: LadderIndex, f: &Wavefunction<T>, rel_tol: T) -> Result<Wavefunction<T>> {
    match f {
        Wavefunction::Closed(w) => Ok(Wavefunction::Closed(w.raise(index.get()))),
        Wavefunction::Sampled(s) => {
            ladder_sampled(T::from_u32(index.get()).expect("small index"), s, rel_tol).map(Wavefunction::Sampled)
        }
    }
}

/// `a_l f = -i f' - i l tanh(x) f`.
pub fn apply_lowering<T: Real>(index: LadderIndex, f: &Wavefunction<T>) -> Result<Wavefunction<T>> {
    match f {
        Wavefunction::Closed(w) => Ok(Wavefunction::Closed(w.lower(index.get()))),
        Wavefunction::Sampled(s) => ladder_sampled(-T::from_u32(index.get()).expect("small index"), s, T::lit(DEFAULT_FD_TOLERANCE))
            .map(Wavefunction::Sampled),
    }
}

/// `H_l f = -f'' - l(l+1) sech^2(x) f` by fourth-order differences.
pub fn apply_hamiltonian<T: Real>(ell: u32, f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    let strength = T::from_u32(ell * (ell + 1)).expect("small index");
    let d2 = f.second_derivative()?;
    Ok(d2.with_values(
        d2.values
            .iter()
            .zip(&f.values)
            .enumerate()
            .map(|(n, (&dd, &v))| -dd - v * (strength * sech_squared(f.x(n))))
            .collect(),
    ))
}

/// Relative sup-norm residuals of `A_l = a_l^+ a_l = H_l + l^2` and
/// `B_l = a_l a_l^+ = H_{l-1} + l^2` on a sampled test function.
pub fn intertwining_residuals<T: Real>(index: LadderIndex, f: &SampledFunction<T>) -> Result<(T, T)> {
    let ell = index.get();
    let ell_sq = T::from_u32(ell * ell).expect("small index");
    let tol = T::lit(DEFAULT_FD_TOLERANCE);
    let lf = T::from_u32(ell).expect("small index");
    let a_f = ladder_sampled(lf, &ladder_sampled(-lf, f, tol)?, tol)?;
    let b_f = ladder_sampled(-lf, &ladder_sampled(lf, f, tol)?, tol)?;
    let shift = |h: SampledFunction<T>| h.with_values(h.values.iter().zip(&f.values).map(|(&a, &b)| a + b * ell_sq).collect());
    let h_l = shift(apply_hamiltonian(ell, f)?);
    let h_lm1 = shift(apply_hamiltonian(ell - 1, f)?);
    let norm = f.sup_norm();
    Ok((a_f.sub(&h_l).sup_norm() / norm, b_f.sub(&h_lm1).sup_norm() / norm))
}

/// Relative sup-norm of `a_l sech^l(x)` evaluated by finite differences on
/// `[lo, hi]` with step `h`.
pub fn annihilation_residual<T: Real>(index: LadderIndex, lo: T, hi: T, h: T) -> Result<T> {
    let ground = LadderWave::sech_power(index.get());
    let sampled = SampledFunction::on_interval(lo, hi, h, |x| ground.value(x));
    let Wavefunction::Sampled(lowered) = apply_lowering(index, &Wavefunction::Sampled(sampled.clone()))? else {
        unreachable!("sampled input stays sampled")
    };
    Ok(lowered.sup_norm() / sampled.sup_norm())
}
