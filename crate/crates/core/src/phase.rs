//! Branch handling for phase shifts and the zero-momentum extrapolation.

use crate::scalar::Real;

/// Representative of `x` modulo `period` in `[0, period)`.
pub fn reduce_mod<T: Real>(x: T, period: T) -> T {
    let r = x - (x / period).floor() * period;
    if r >= period {
        r - period
    } else {
        r
    }
}

/// Adds integer multiples of `period` so that each sample sits as close as
/// possible to its predecessor.
pub fn unwrap_by_continuity<T: Real>(values: &[T], period: T) -> Vec<T> {
    let mut out = Vec::with_capacity(values.len());
    let mut prev: Option<T> = None;
    for &v in values {
        let w = match prev {
            None => v,
            Some(p) => v - ((v - p) / period).round() * period,
        };
        out.push(w);
        prev = Some(w);
    }
    out
}

/// Shifts the whole curve by a multiple of `period` so that its last sample
/// lies in `(-period/2, period/2]`.
pub fn anchor_last_near_zero<T: Real>(values: &mut [T], period: T) {
    let Some(&last) = values.last() else {
        return;
    };
    let mut shift = (last / period).round() * period;
    if last - shift <= -period / T::lit(2.0) {
        shift = shift - period;
    }
    for v in values.iter_mut() {
        *v = *v - shift;
    }
}

/// Largest absolute jump between neighbouring samples.
pub fn max_adjacent_jump<T: Real>(values: &[T]) -> T {
    values.windows(2).map(|w| (w[1] - w[0]).abs()).fold(T::zero(), T::max)
}

/// Value at `x = 0` of the quadratic through three samples: Richardson
/// extrapolation for arbitrary (here geometric) spacing.
pub fn extrapolate_to_zero<T: Real>(xs: [T; 3], ys: [T; 3]) -> T {
    let [x0, x1, x2] = xs;
    let [y0, y1, y2] = ys;
    y0 * (x1 * x2) / ((x0 - x1) * (x0 - x2)) + y1 * (x0 * x2) / ((x1 - x0) * (x1 - x2)) + y2 * (x0 * x1) / ((x2 - x0) * (x2 - x1))
}
