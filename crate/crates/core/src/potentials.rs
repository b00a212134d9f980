//! Potentials, the dimensionless reduction and the asymptotic decay check.
//!
//! All potentials here are already expressed in the dimensionless variables
//! `x = b r`, `k^2 = 2 m b^2 E / hbar^2`, so the Schrodinger equation reads
//! `-psi'' + v(x) psi = k^2 psi`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Half-width used when none is given. `sech^2(20)` is about `1.7e-17`.
pub const DEFAULT_HALFWIDTH: f64 = 20.0;

/// Probes closer to the origin than this are not considered asymptotic.
pub const MIN_DECAY_PROBE: f64 = 10.0;

/// Largest `x^2 |v|` accepted at the outermost probe.
pub const DECAY_TAIL_LIMIT: f64 = 1e-6;

const SYMMETRY_TOL: f64 = 1e-9;

/// Physical well parameters together with the derived dimensionless depth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessParams<T> {
    pub well_depth: T,
    pub inverse_range: T,
    pub mass: T,
    pub hbar: T,
    /// `2 m V0 b^2 / hbar^2`.
    pub depth: T,
}

impl<T: Real> DimensionlessParams<T> {
    /// Dimensionless momentum squared for a physical energy.
    pub fn k_squared(&self, energy: T) -> T {
        T::lit(2.0) * self.mass * energy / (self.inverse_range * self.inverse_range * self.hbar * self.hbar)
    }

    /// Dimensionless coordinate for a physical distance.
    pub fn coordinate(&self, r: T) -> T {
        self.inverse_range * r
    }
}

/// Reduces physical well parameters to the dimensionless depth.
pub fn to_dimensionless<T: Real>(well_depth: T, inverse_range: T, mass: T, hbar: T) -> Result<DimensionlessParams<T>> {
    for (name, value) in [("b", inverse_range), ("m", mass), ("hbar", hbar)] {
        if !(value > T::zero()) || !value.is_finite() {
            return Err(Error::Domain(format!("{name} must be positive and finite, got {value}")));
        }
    }
    if !well_depth.is_finite() {
        return Err(Error::Domain(format!("V0 must be finite, got {well_depth}")));
    }
    let depth = T::lit(2.0) * mass * well_depth * inverse_range * inverse_range / (hbar * hbar);
    Ok(DimensionlessParams { well_depth, inverse_range, mass, hbar, depth })
}

/// Samples of a user potential, strictly increasing in `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table<T> {
    xs: Vec<T>,
    vs: Vec<T>,
}

impl<T: Real> Table<T> {
    pub fn new(xs: Vec<T>, vs: Vec<T>) -> Result<Self> {
        if xs.len() != vs.len() {
            return Err(Error::Format(format!("{} abscissae but {} values", xs.len(), vs.len())));
        }
        if xs.len() < 4 {
            return Err(Error::Format(format!("need at least 4 samples, got {}", xs.len())));
        }
        if let Some(bad) = xs.iter().chain(&vs).find(|v| !v.is_finite()) {
            return Err(Error::Format(format!("non-finite sample {bad}")));
        }
        if let Some(w) = xs.windows(2).find(|w| !(w[1] > w[0])) {
            return Err(Error::Format(format!("abscissae not strictly increasing at x = {}", w[1])));
        }
        Ok(Self { xs, vs })
    }

    /// Samples a function on `xs`.
    pub fn from_fn(xs: Vec<T>, f: impl Fn(T) -> T) -> Result<Self> {
        let vs = xs.iter().map(|&x| f(x)).collect();
        Self::new(xs, vs)
    }

    /// Reads CSV with an `x,v` header.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || &headers[0] != "x" || &headers[1] != "v" {
            return Err(Error::Format(format!("expected header `x,v`, found `{}`", headers.iter().collect::<Vec<_>>().join(","))));
        }
        let (mut xs, mut vs) = (Vec::new(), Vec::new());
        for (line, record) in rdr.records().enumerate() {
            let record = record?;
            let parse = |field: &str| -> Result<T> {
                field
                    .parse::<f64>()
                    .ok()
                    .and_then(T::from_f64)
                    .ok_or_else(|| Error::Format(format!("row {}: cannot parse `{field}`", line + 2)))
            };
            xs.push(parse(&record[0])?);
            vs.push(parse(&record[1])?);
        }
        Self::new(xs, vs)
    }

    pub fn to_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        writer.write_all(b"x,v\n")?;
        for (x, v) in self.xs.iter().zip(&self.vs) {
            writeln!(writer, "{x:.16e},{v:.16e}")?;
        }
        Ok(())
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn vs(&self) -> &[T] {
        &self.vs
    }

    fn slope(&self, i: usize) -> T {
        let n = self.xs.len();
        let (lo, hi) = match i {
            0 => (0, 1),
            i if i + 1 == n => (n - 2, n - 1),
            i => (i - 1, i + 1),
        };
        (self.vs[hi] - self.vs[lo]) / (self.xs[hi] - self.xs[lo])
    }

    /// Catmull-Rom interpolation on the (possibly non-uniform) samples;
    /// zero outside the sampled range.
    pub fn interpolate(&self, x: T) -> T {
        let n = self.xs.len();
        if x < self.xs[0] || x > self.xs[n - 1] {
            return T::zero();
        }
        let i = match self.xs.partition_point(|&xi| xi <= x) {
            0 => 0,
            p if p >= n => n - 2,
            p => p - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let s = (x - self.xs[i]) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let h00 = two * s3 - three * s2 + T::one();
        let h10 = s3 - two * s2 + s;
        let h01 = three * s2 - two * s3;
        let h11 = s3 - s2;
        h00 * self.vs[i] + h10 * h * self.slope(i) + h01 * self.vs[i + 1] + h11 * h * self.slope(i + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind<T> {
    /// `-l(l+1) sech^2 x`.
    Reflectionless { ell: u32 },
    Tabulated(Table<T>),
    Zero,
}

/// An even (or claimed-even) one-dimensional potential.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Potential<T> {
    kind: PotentialKind<T>,
    domain_halfwidth: T,
    symmetric: bool,
}

impl<T: Real> Potential<T> {
    pub fn reflectionless(ell: u32) -> Self {
        Self { kind: PotentialKind::Reflectionless { ell }, domain_halfwidth: T::lit(DEFAULT_HALFWIDTH), symmetric: true }
    }

    pub fn zero() -> Self {
        Self { kind: PotentialKind::Zero, domain_halfwidth: T::lit(DEFAULT_HALFWIDTH), symmetric: true }
    }

    /// Wraps a table, marking it symmetric when it passes the evenness audit.
    pub fn tabulated(table: Table<T>) -> Self {
        let mut p = Self { kind: PotentialKind::Tabulated(table), domain_halfwidth: T::lit(DEFAULT_HALFWIDTH), symmetric: false };
        p.symmetric = p.symmetry_defect().is_none();
        p
    }

    /// Wraps a table whose evenness is asserted by the caller; the claim is
    /// audited on the sample abscissae.
    pub fn tabulated_symmetric(table: Table<T>) -> Result<Self> {
        let p = Self::tabulated(table);
        match p.symmetry_defect() {
            None => Ok(p),
            Some((x, gap)) => Err(Error::Precondition(format!("table claimed even but |v(x) - v(-x)| = {gap:e} at x = {x}"))),
        }
    }

    pub fn with_domain_halfwidth(mut self, halfwidth: T) -> Result<Self> {
        if !(halfwidth > T::zero()) || !halfwidth.is_finite() {
            return Err(Error::Domain(format!("domain half-width must be positive, got {halfwidth}")));
        }
        self.domain_halfwidth = halfwidth;
        Ok(self)
    }

    pub fn kind(&self) -> &PotentialKind<T> {
        &self.kind
    }

    pub fn domain_halfwidth(&self) -> T {
        self.domain_halfwidth
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Family index when this is a reflectionless well.
    pub fn ell(&self) -> Option<u32> {
        match self.kind {
            PotentialKind::Reflectionless { ell } => Some(ell),
            _ => None,
        }
    }

    /// Potential at `x`, rejecting non-finite coordinates.
    pub fn evaluate(&self, x: T) -> Result<T> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("coordinate must be finite, got {x}")));
        }
        Ok(self.value(x))
    }

    /// Unchecked evaluation for inner loops.
    #[inline]
    pub fn value(&self, x: T) -> T {
        if x.abs() > self.domain_halfwidth {
            return T::zero();
        }
        match &self.kind {
            PotentialKind::Reflectionless { ell } => {
                let strength = T::from_u32(ell * (ell + 1)).expect("small integer");
                -strength * sech_squared(x)
            }
            PotentialKind::Tabulated(table) => table.interpolate(x),
            PotentialKind::Zero => T::zero(),
        }
    }

    /// First abscissa at which the evenness audit fails, with the gap.
    fn symmetry_defect(&self) -> Option<(T, T)> {
        let PotentialKind::Tabulated(table) = &self.kind else {
            return None;
        };
        let tol = T::lit(SYMMETRY_TOL);
        table.xs().iter().find_map(|&x| {
            let (a, b) = (self.value(x), self.value(-x));
            let gap = (a - b).abs();
            (gap > tol * T::one().max(a.abs())).then_some((x, gap))
        })
    }
}

/// Builds the reflectionless well of order `ell`, which must be a
/// non-negative integer.
pub fn make_reflectionless<T: Real>(ell: T) -> Result<Potential<T>> {
    if !ell.is_finite() || ell < T::zero() || ell.fract() != T::zero() {
        return Err(Error::Domain(format!("ell must be a non-negative integer, got {ell}")));
    }
    let ell = ell.to_u32().ok_or_else(|| Error::Domain(format!("ell = {ell} is too large")))?;
    Ok(Potential::reflectionless(ell))
}

/// `sech^2 x` written to stay finite for every finite `x`.
#[inline]
pub fn sech_squared<T: Real>(x: T) -> T {
    let e = (-T::lit(2.0) * x.abs()).exp();
    T::lit(4.0) * e / ((T::one() + e) * (T::one() + e))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayReport<T> {
    pub passes: bool,
    /// Largest `x^2 |v(x)|` over the probes.
    pub max_tail: T,
}

/// Finite-probe check that `x^2 |v(x)|` dies off at large `|x|`.
///
/// Passes when `x^2 |v(x)|` is non-increasing over the probes (taken in
/// increasing order) and its outermost value is below [`DECAY_TAIL_LIMIT`].
/// Only `x > 0` is probed; the potentials are even.
pub fn check_decay_condition<T: Real>(p: &Potential<T>, probe_xs: &[T]) -> Result<DecayReport<T>> {
    if probe_xs.is_empty() {
        return Err(Error::Domain("no decay probes given".into()));
    }
    if let Some(&x) = probe_xs.iter().find(|&&x| !(x >= T::lit(MIN_DECAY_PROBE))) {
        return Err(Error::Domain(format!("probe x = {x} is below {MIN_DECAY_PROBE}, not asymptotic")));
    }
    let mut probes = probe_xs.to_vec();
    probes.sort_by(|a, b| a.partial_cmp(b).expect("finite probes"));
    let tails: Vec<T> = probes.iter().map(|&x| x * x * p.value(x).abs()).collect();
    let monotone = tails.windows(2).all(|w| w[1] <= w[0]);
    let last = *tails.last().expect("non-empty");
    let max_tail = tails.iter().copied().fold(T::zero(), T::max);
    Ok(DecayReport { passes: monotone && last < T::lit(DECAY_TAIL_LIMIT), max_tail })
}
