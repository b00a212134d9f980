//! Independent reference solutions shared by the integration and acceptance
//! tests. Nothing here touches the library's solver paths.

#![allow(dead_code)]

use num_complex::Complex64;

/// Closed-form scattering through a piecewise-constant potential.
///
/// `edges` are the region boundaries in increasing order and `levels` holds
/// one potential value per region, so `levels.len() == edges.len() + 1`.
/// The outermost levels must be zero. Returns `(r, t)` for a unit wave
/// incident from the left: `e^{ikx} + r e^{-ikx}` on the left and
/// `t e^{ikx}` on the right.
pub fn transfer_matrix(edges: &[f64], levels: &[f64], k: f64) -> (Complex64, Complex64) {
    assert_eq!(levels.len(), edges.len() + 1);
    assert!(levels[0] == 0.0 && *levels.last().unwrap() == 0.0);
    let i = Complex64::i();
    let q: Vec<Complex64> = levels
        .iter()
        .map(|&v| Complex64::new(k * k - v, 0.0).sqrt())
        .collect();

    // Right-most region carries only the transmitted wave with unit amplitude.
    let (mut a, mut b) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    for j in (0..edges.len()).rev() {
        let x = edges[j];
        let (qr, ql) = (q[j + 1], q[j]);
        let psi = a * (i * qr * x).exp() + b * (-i * qr * x).exp();
        let dpsi = i * qr * (a * (i * qr * x).exp() - b * (-i * qr * x).exp());
        a = 0.5 * (psi + dpsi / (i * ql)) * (-i * ql * x).exp();
        b = 0.5 * (psi - dpsi / (i * ql)) * (i * ql * x).exp();
    }
    (b / a, Complex64::new(1.0, 0.0) / a)
}

/// The square well `v = depth` on `|x| < half_width`.
pub fn square_well(depth: f64, half_width: f64, k: f64) -> (Complex64, Complex64) {
    transfer_matrix(&[-half_width, half_width], &[0.0, depth, 0.0], k)
}

/// Zero-momentum-anchored phase of the reflectionless well of order `ell`.
pub fn arctan_sum(ell: u32, k: f64) -> f64 {
    (1..=ell).map(|j| (j as f64 / k).atan()).sum()
}

/// Geometric grid of `n` points from `lo` to `hi` inclusive.
pub fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let ratio = (hi / lo).powf(1.0 / (n - 1) as f64);
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo * ratio.powi(i as i32) })
        .collect()
}

/// CSV text for the square well sampled on nodes `j * step`, aligned with a
/// symmetric solver grid of the same step. The jump nodes carry the midpoint
/// value. Outside `[-span, span]` the table is sparse and zero.
pub fn square_well_csv(depth: f64, half_width: f64, step: f64, span: f64) -> String {
    let mut out = String::from("x,v\n");
    let far = [-20.0, -15.0, -10.0, -5.0];
    for x in far.iter().filter(|&&x| x < -span) {
        out.push_str(&format!("{x},0\n"));
    }
    let n = (span / step).round() as i64;
    let jump = (half_width / step).round() as i64;
    for j in -n..=n {
        let x = j as f64 * step;
        let v = match j.abs().cmp(&jump) {
            std::cmp::Ordering::Less => depth,
            std::cmp::Ordering::Equal => 0.5 * depth,
            std::cmp::Ordering::Greater => 0.0,
        };
        out.push_str(&format!("{x:.17e},{v}\n"));
    }
    for x in far.iter().rev().map(|x| -x).filter(|&x| x > span) {
        out.push_str(&format!("{x},0\n"));
    }
    out
}
