//! One-dimensional scattering workbench for the reflectionless wells
//! `v(x) = -l(l+1) sech^2 x`.
//!
//! Two independent routes compute the same observables:
//!
//! * [`analytic`] builds scattering states, bound states and half-bound
//!   states exactly with the ladder operators `a_l^+ = p + i l tanh x`.
//! * [`numeric`] integrates the Schrodinger equation with Numerov's method
//!   for any even potential, tabulated ones included.
//!
//! [`levinson`] feeds bound-state censuses from either route into two
//! one-dimensional Levinson-type predictors and audits them against the
//! computed zero-momentum phase shift.
//!
//! All numerical code is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below are what the command-line tool uses.

// `!(a > b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod levinson;
pub mod numeric;
pub mod phase;
pub mod potentials;
pub mod scalar;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Real;
pub use states::{BoundState, BoundStateCensus, HalfBoundState, Parity, ReportingGrid};

pub type Potential64 = potentials::Potential<f64>;
pub type Potential32 = potentials::Potential<f32>;
pub type Table64 = potentials::Table<f64>;
pub type BoundState64 = BoundState<f64>;
pub type HalfBoundState64 = HalfBoundState<f64>;
pub type ScatteringCoefficients64 = analytic::ScatteringCoefficients<f64>;
pub type SolverConfig64 = numeric::SolverConfig<f64>;
pub type SolverConfig32 = numeric::SolverConfig<f32>;
pub type ScatteringResult64 = numeric::ScatteringResult<f64>;
pub type ParityPhases64 = numeric::ParityPhases<f64>;
pub type PhaseShiftCurve64 = numeric::PhaseShiftCurve<f64>;
pub type LevinsonPrediction64 = levinson::LevinsonPrediction<f64>;
pub type LevinsonAudit64 = levinson::LevinsonAudit<f64>;
