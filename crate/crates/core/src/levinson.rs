//! Two one-dimensional Levinson-type predictors for the zero-momentum phase
//! shift, and an audit that compares them with the exact and numerical
//! values for the reflectionless wells.
//!
//! * The direct restriction of the three-dimensional theorem:
//!   `delta(0) = n pi`, plus `pi/2` in the critical case.
//! * The parity form: non-critical `delta_e = n_e pi + pi/2`,
//!   `delta_o = n_o pi`; critical `delta_e = n_e pi`,
//!   `delta_o = n_o pi + pi/2`.
//!
//! The audit reports what it finds; a contradiction is a result, not an
//! error.

use serde::{Deserialize, Serialize};

use crate::analytic;
use crate::error::{Error, Result};
use crate::numeric::{self, PhaseParity, SolverConfig};
use crate::potentials::Potential;
use crate::scalar::Real;
use crate::states::{BoundStateCensus, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "direct_3d_restriction")]
    DirectRestriction,
    #[serde(rename = "parity")]
    Parity,
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Theorem::DirectRestriction => "direct_3d_restriction",
            Theorem::Parity => "parity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Analytic,
    Numeric,
    Both,
}

impl Source {
    fn analytic(self) -> bool {
        matches!(self, Source::Analytic | Source::Both)
    }

    fn numeric(self) -> bool {
        matches!(self, Source::Numeric | Source::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agrees,
    Contradicts,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Agrees => "agrees",
            Verdict::Contradicts => "contradicts",
        })
    }
}

/// Verdicts separate values closer than this from the rest of the
/// `pi/2` lattice on which all predictions lie.
pub fn verdict_tolerance<T: Real>() -> T {
    T::PI() / T::lit(8.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevinsonPrediction<T> {
    pub theorem: Theorem,
    pub inputs: BoundStateCensus,
    pub predicted_delta_even: Option<T>,
    pub predicted_delta_odd: Option<T>,
    pub predicted_delta_direct: Option<T>,
}

fn count<T: Real>(n: usize) -> T {
    T::from_count(n)
}

pub fn predict_direct<T: Real>(census: &BoundStateCensus) -> LevinsonPrediction<T> {
    let critical = if census.is_critical() { T::FRAC_PI_2() } else { T::zero() };
    LevinsonPrediction {
        theorem: Theorem::DirectRestriction,
        inputs: *census,
        predicted_delta_even: None,
        predicted_delta_odd: None,
        predicted_delta_direct: Some(count::<T>(census.n_total) * T::PI() + critical),
    }
}

pub fn predict_parity<T: Real>(census: &BoundStateCensus) -> Result<LevinsonPrediction<T>> {
    if census.critical_even && census.critical_odd {
        return Err(Error::InvalidCensus("both parity sectors flagged critical".into()));
    }
    let (pi, half) = (T::PI(), T::FRAC_PI_2());
    let (even, odd) = if census.is_critical() {
        (count::<T>(census.n_even) * pi, count::<T>(census.n_odd) * pi + half)
    } else {
        (count::<T>(census.n_even) * pi + half, count::<T>(census.n_odd) * pi)
    };
    Ok(LevinsonPrediction {
        theorem: Theorem::Parity,
        inputs: *census,
        predicted_delta_even: Some(even),
        predicted_delta_odd: Some(odd),
        predicted_delta_direct: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevinsonAudit<T> {
    pub ell: u32,
    pub prediction: LevinsonPrediction<T>,
    pub actual_delta_zero: T,
    pub actual_source: Source,
    /// `ell pi / 2`, when the analytic route was used.
    pub analytic_delta_zero: Option<T>,
    /// Extrapolated numerical phase curve, when the numeric route was used.
    pub numeric_delta_zero: Option<T>,
    pub verdict: Verdict,
    /// Distance from the actual value to the closest prediction.
    pub discrepancy: T,
    pub notes: Vec<String>,
}

/// Census of `Reflectionless(ell)` from the selected route(s). With both,
/// any disagreement is an internal-consistency failure.
pub fn census_for<T: Real>(ell: u32, source: Source, cfg: &SolverConfig<T>) -> Result<BoundStateCensus> {
    let exact = source.analytic().then(|| analytic::census(ell));
    let solved = if source.numeric() { Some(numeric::numeric_census(&Potential::<T>::reflectionless(ell), cfg)?) } else { None };
    match (exact, solved) {
        (Some(a), Some(n)) if a != n => {
            Err(Error::Consistency(format!("ell = {ell}: analytic census {a:?} but numeric census {n:?}")))
        }
        (Some(a), _) => Ok(a),
        (None, Some(n)) => Ok(n),
        (None, None) => unreachable!("every source selects a route"),
    }
}

fn judge<T: Real>(prediction: &LevinsonPrediction<T>, actual: T) -> (Verdict, T, Option<Parity>) {
    let candidates: Vec<(Option<Parity>, T)> = match prediction.theorem {
        Theorem::DirectRestriction => vec![(None, prediction.predicted_delta_direct.expect("direct prediction"))],
        Theorem::Parity => vec![
            (Some(Parity::Even), prediction.predicted_delta_even.expect("even prediction")),
            (Some(Parity::Odd), prediction.predicted_delta_odd.expect("odd prediction")),
        ],
    };
    let (sector, gap) = candidates
        .into_iter()
        .map(|(s, p)| (s, (p - actual).abs()))
        .fold((None, T::infinity()), |best, cur| if cur.1 < best.1 { cur } else { best });
    let verdict = if gap < verdict_tolerance() { Verdict::Agrees } else { Verdict::Contradicts };
    (verdict, gap, sector)
}

/// Audits each requested theorem on `Reflectionless(ell)`.
pub fn audit<T: Real>(
    ell: u32,
    theorems: &[Theorem],
    source: Source,
    cfg: &SolverConfig<T>,
) -> Result<Vec<LevinsonAudit<T>>> {
    let census = census_for(ell, source, cfg)?;
    let analytic_delta_zero = source.analytic().then(|| analytic::phase_shift_zero::<T>(ell));
    let numeric_delta_zero = if source.numeric() {
        let curve = numeric::phase_curve(
            &Potential::reflectionless(ell),
            &numeric::default_k_grid(),
            cfg,
            PhaseParity::Total,
        )?;
        Some(curve.delta_zero_extrapolated)
    } else {
        None
    };
    let actual = analytic_delta_zero.or(numeric_delta_zero).expect("every source selects a route");

    let mut shared = Vec::new();
    if let (Some(a), Some(n)) = (analytic_delta_zero, numeric_delta_zero) {
        if (a - n).abs() >= verdict_tolerance() {
            shared.push(format!("numeric delta(0) = {n} is far from the exact {a}; the exact value is used"));
        }
    }
    if ell == 2 {
        shared.push(
            "the even half-bound state of ell = 2 sits at k^2 = 0 (not k^2 = -1) and is counted as critical, not as a bound state"
                .into(),
        );
    }

    theorems
        .iter()
        .map(|&theorem| {
            let prediction = match theorem {
                Theorem::DirectRestriction => predict_direct(&census),
                Theorem::Parity => predict_parity(&census)?,
            };
            let (verdict, discrepancy, sector) = judge(&prediction, actual);
            let mut notes = shared.clone();
            if let (Some(sector), Verdict::Agrees) = (sector, verdict) {
                notes.push(format!("matched by the {sector} sector"));
            }
            Ok(LevinsonAudit {
                ell,
                prediction,
                actual_delta_zero: actual,
                actual_source: source,
                analytic_delta_zero,
                numeric_delta_zero,
                verdict,
                discrepancy,
                notes,
            })
        })
        .collect()
}
