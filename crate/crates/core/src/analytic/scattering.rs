//! Scattering amplitudes and phase shifts of the reflectionless family.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::ladder::LadderWave;
use crate::error::{Error, Result};
use crate::phase::{anchor_last_near_zero, unwrap_by_continuity};
use crate::scalar::Real;

/// Asymptotic amplitudes: `I e^{ikx} + R e^{-ikx}` on the left and
/// `T e^{ikx}` on the right.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringCoefficients<T> {
    pub k: T,
    pub incident: Complex<T>,
    pub reflected: Complex<T>,
    pub transmitted: Complex<T>,
}

impl<T: Real> ScatteringCoefficients<T> {
    pub fn reflection_amplitude(&self) -> Complex<T> {
        self.reflected / self.incident
    }

    pub fn transmission_amplitude(&self) -> Complex<T> {
        self.transmitted / self.incident
    }

    pub fn reflection_probability(&self) -> T {
        self.reflection_amplitude().norm_sqr()
    }

    pub fn transmission_probability(&self) -> T {
        self.transmission_amplitude().norm_sqr()
    }

    /// `arg(T / I) / 2` reduced to `[0, pi)`.
    pub fn half_arg(&self) -> T {
        crate::phase::reduce_mod(self.transmission_amplitude().arg() / T::lit(2.0), T::PI())
    }
}

fn require_positive_k<T: Real>(k: T) -> Result<()> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::Domain(format!("momentum must be positive and finite, got {k}")));
    }
    Ok(())
}

/// `R = 0`, `T = prod (k + ij)`, `I = prod (k - ij)` for `j = 1..=ell`.
pub fn coefficients<T: Real>(ell: u32, k: T) -> Result<ScatteringCoefficients<T>> {
    require_positive_k(k)?;
    let one = Complex::new(T::one(), T::zero());
    let (mut t, mut i) = (one, one);
    for j in 1..=ell {
        let j = T::from_u32(j).expect("small index");
        t = t * Complex::new(k, j);
        i = i * Complex::new(k, -j);
    }
    Ok(ScatteringCoefficients { k, incident: i, reflected: Complex::new(T::zero(), T::zero()), transmitted: t })
}

/// `sum_{j=1..ell} atan(j / k)`.
pub fn phase_shift<T: Real>(ell: u32, k: T) -> Result<T> {
    require_positive_k(k)?;
    Ok((1..=ell).map(|j| (T::from_u32(j).expect("small index") / k).atan()).fold(T::zero(), |a, b| a + b))
}

/// Zero-momentum limit `ell * pi / 2`.
pub fn phase_shift_zero<T: Real>(ell: u32) -> T {
    T::from_u32(ell).expect("small index") * T::FRAC_PI_2()
}

/// `a_ell^+ ... a_1^+ e^{ikx}` in closed form.
pub fn scattering_wave<T: Real>(ell: u32, k: T) -> LadderWave<T> {
    (1..=ell).fold(LadderWave::plane_wave(k), |w, j| w.raise(j))
}

/// Samples of the scattering state built by repeated raising.
pub fn scattering_wavefunction<T: Real>(ell: u32, k: T, xs: &[T]) -> Result<Vec<Complex<T>>> {
    if k == T::zero() || !k.is_finite() {
        return Err(Error::Domain(format!("momentum must be finite and non-zero, got {k}")));
    }
    if let Some(x) = xs.iter().find(|x| !x.is_finite()) {
        return Err(Error::Domain(format!("non-finite coordinate {x}")));
    }
    Ok(scattering_wave(ell, k).sample(xs))
}

/// `arg(T/I) / 2` unwrapped by continuity along a geometric path in `k`
/// that starts deep in the `delta -> 0` regime.
pub fn phase_shift_from_amplitudes<T: Real>(ell: u32, k: T) -> Result<T> {
    require_positive_k(k)?;
    let far = T::lit(1e4) * T::from_u32(ell.max(1)).expect("small index");
    let start = far.max(k);
    let steps_per_decade = T::lit(50.0);
    let n = ((start / k).log10() * steps_per_decade).ceil().to_usize().unwrap_or(0).max(1);
    let ratio = (k / start).powf(T::one() / T::from_count(n));
    let args: Vec<T> = (0..=n)
        .map(|s| {
            let ks = if s == n { k } else { start * ratio.powi(s as i32) };
            let c = coefficients(ell, ks).expect("positive momentum");
            c.transmission_amplitude().arg()
        })
        .rev()
        .collect();
    let mut unwrapped = unwrap_by_continuity(&args, T::TAU());
    anchor_last_near_zero(&mut unwrapped, T::TAU());
    Ok(unwrapped[0] / T::lit(2.0))
}
