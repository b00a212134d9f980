//! Closed-form waves `P(tanh x) sech^m(x) e^{ikx}` and the exact action of
//! the ladder operators on them.
//!
//! With `t = tanh x`, `dt/dx = 1 - t^2` and `d(sech^m)/dx = -m t sech^m`, so
//! the raising operator `a_j^+ = -i d/dx + i j tanh x` maps the polynomial
//! `P` to `-i (1 - t^2) P' + (k + i (m + j) t) P` and leaves `m`, `k` alone.
//! The lowering operator differs only by the sign of `j`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LadderWave<T> {
    /// Coefficients of `P` in increasing powers of `tanh x`.
    poly: Vec<Complex<T>>,
    sech_power: u32,
    k: T,
}

impl<T: Real> LadderWave<T> {
    /// `e^{ikx}`.
    pub fn plane_wave(k: T) -> Self {
        Self { poly: vec![Complex::new(T::one(), T::zero())], sech_power: 0, k }
    }

    /// `sech^m x`.
    pub fn sech_power(m: u32) -> Self {
        Self { poly: vec![Complex::new(T::one(), T::zero())], sech_power: m, k: T::zero() }
    }

    pub fn zero() -> Self {
        Self { poly: Vec::new(), sech_power: 0, k: T::zero() }
    }

    pub fn coefficients(&self) -> &[Complex<T>] {
        &self.poly
    }

    pub fn momentum(&self) -> T {
        self.k
    }

    pub fn sech_exponent(&self) -> u32 {
        self.sech_power
    }

    /// `a_j^+ psi`.
    pub fn raise(&self, j: u32) -> Self {
        self.ladder(T::from_u32(j).expect("small index"))
    }

    /// `a_j psi`.
    pub fn lower(&self, j: u32) -> Self {
        self.ladder(-T::from_u32(j).expect("small index"))
    }

    fn ladder(&self, signed_j: T) -> Self {
        let i = Complex::new(T::zero(), T::one());
        let m = T::from_u32(self.sech_power).expect("small exponent");
        let slope = i * (m + signed_j);
        let mut out = scale(&one_minus_t2_times(&derivative(&self.poly)), -i);
        add_into(&mut out, &times_linear(&self.poly, Complex::new(self.k, T::zero()), slope));
        Self { poly: trim(out), sech_power: self.sech_power, k: self.k }
    }

    /// `d psi / dx`, again in closed form.
    pub fn derivative(&self) -> Self {
        let i = Complex::new(T::zero(), T::one());
        let m = T::from_u32(self.sech_power).expect("small exponent");
        let mut out = one_minus_t2_times(&derivative(&self.poly));
        add_into(&mut out, &times_linear(&self.poly, i * self.k, Complex::new(-m, T::zero())));
        Self { poly: trim(out), sech_power: self.sech_power, k: self.k }
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self { poly: trim(scale(&self.poly, factor)), ..self.clone() }
    }

    /// `P(t)` alone.
    pub fn envelope_at_tanh(&self, t: T) -> Complex<T> {
        self.poly.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * t + c)
    }

    pub fn value(&self, x: T) -> Complex<T> {
        let envelope = self.envelope_at_tanh(x.tanh());
        let sech = if self.sech_power == 0 { T::one() } else { (T::one() / x.cosh()).powi(self.sech_power as i32) };
        envelope * Complex::cis(self.k * x) * sech
    }

    pub fn sample(&self, xs: &[T]) -> Vec<Complex<T>> {
        xs.iter().map(|&x| self.value(x)).collect()
    }

    /// Amplitude multiplying `e^{ikx}` as `x -> +inf` (zero if `m > 0`).
    pub fn right_amplitude(&self) -> Complex<T> {
        if self.sech_power > 0 {
            Complex::new(T::zero(), T::zero())
        } else {
            self.envelope_at_tanh(T::one())
        }
    }

    /// Amplitude multiplying `e^{ikx}` as `x -> -inf`.
    pub fn left_amplitude(&self) -> Complex<T> {
        if self.sech_power > 0 {
            Complex::new(T::zero(), T::zero())
        } else {
            self.envelope_at_tanh(-T::one())
        }
    }
}

fn derivative<T: Real>(p: &[Complex<T>]) -> Vec<Complex<T>> {
    p.iter().enumerate().skip(1).map(|(n, &c)| c * T::from_count(n)).collect()
}

fn one_minus_t2_times<T: Real>(p: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut out = vec![Complex::new(T::zero(), T::zero()); p.len() + 2];
    for (n, &c) in p.iter().enumerate() {
        out[n] = out[n] + c;
        out[n + 2] = out[n + 2] - c;
    }
    out
}

/// `(a + b t) p`.
fn times_linear<T: Real>(p: &[Complex<T>], a: Complex<T>, b: Complex<T>) -> Vec<Complex<T>> {
    let mut out = vec![Complex::new(T::zero(), T::zero()); p.len() + 1];
    for (n, &c) in p.iter().enumerate() {
        out[n] = out[n] + a * c;
        out[n + 1] = out[n + 1] + b * c;
    }
    out
}

fn scale<T: Real>(p: &[Complex<T>], f: Complex<T>) -> Vec<Complex<T>> {
    p.iter().map(|&c| c * f).collect()
}

fn add_into<T: Real>(acc: &mut Vec<Complex<T>>, other: &[Complex<T>]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Complex::new(T::zero(), T::zero()));
    }
    for (a, &b) in acc.iter_mut().zip(other) {
        *a = *a + b;
    }
}

fn trim<T: Real>(mut p: Vec<Complex<T>>) -> Vec<Complex<T>> {
    while p.last().is_some_and(|c| c.re == T::zero() && c.im == T::zero()) {
        p.pop();
    }
    p
}
