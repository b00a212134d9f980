//! Exact solutions of the reflectionless wells `-l(l+1) sech^2 x`, built
//! with the ladder operators `a_l^+ = p + i l tanh x`.

pub mod ladder;
pub mod operators;
pub mod scattering;
pub mod spectrum;

pub use ladder::LadderWave;
pub use operators::{
    annihilation_residual, apply_hamiltonian, apply_lowering, apply_raising, apply_raising_with_tolerance,
    intertwining_residuals, LadderIndex, SampledFunction, Wavefunction,
};
pub use scattering::{
    coefficients, phase_shift, phase_shift_from_amplitudes, phase_shift_zero, scattering_wave, scattering_wavefunction,
    ScatteringCoefficients,
};
pub use spectrum::{
    bound_spectrum, bound_spectrum_on, bound_wave, census, ground_state, ground_state_on, half_bound_state,
    half_bound_state_on, half_bound_wave,
};
