//! Dilogarithm, its complex extension, and the q-deformed version.

use num_complex::Complex64;

use crate::{Error, Result};

/// `sum_{m>=1} x^m / m^2` for real `x` in `[-1, 1)`.
///
/// The plain series is used, so convergence slows near the endpoints; at
/// the golden-ratio arguments this module actually needs, forty terms give
/// full precision.
pub fn dilog(x: f64) -> Result<f64> {
    if !(-1.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "dilogarithm series needs -1 <= x < 1, got {x}"
        )));
    }
    let mut acc = 0.0;
    let mut power = 1.0;
    for m in 1..20_000_000u64 {
        power *= x;
        let term = power / (m * m) as f64;
        acc += term;
        if term.abs() < 1e-17 * (1.0 + acc.abs()) {
            break;
        }
    }
    Ok(acc)
}

/// Complex dilogarithm by the same series; requires `|z| < 1`.
pub(crate) fn dilog_complex(z: Complex64) -> Complex64 {
    debug_assert!(z.norm() < 1.0, "series diverges at |z| >= 1");
    let mut acc = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for m in 1..20_000_000u64 {
        power *= z;
        let term = power / (m * m) as f64;
        acc += term;
        if term.norm() < 1e-17 * (1.0 + acc.norm()) {
            break;
        }
    }
    acc
}

/// The q-deformed dilogarithm `sum_{m>=1} x^m / (m (1 - q^m))`, summed
/// until a term falls below `tol` times the accumulated value.
pub fn quantum_dilog(x: Complex64, q: Complex64, tol: f64) -> Result<Complex64> {
    if x.norm() >= 1.0 || q.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "q-deformed dilogarithm needs |x| < 1 and |q| < 1, got |x| = {}, |q| = {}",
            x.norm(),
            q.norm()
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x_pow = Complex64::new(1.0, 0.0);
    let mut q_pow = Complex64::new(1.0, 0.0);
    for m in 1..20_000_000u64 {
        x_pow *= x;
        q_pow *= q;
        let term = x_pow / (m as f64 * (Complex64::new(1.0, 0.0) - q_pow));
        acc += term;
        if term.norm() < tol * acc.norm() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn phi() -> f64 {
        (1.0 + 5f64.sqrt()) / 2.0
    }

    #[test]
    fn dilog_vanishes_at_zero() {
        assert_eq!(dilog(0.0).unwrap(), 0.0);
    }

    #[test]
    fn dilog_golden_ratio_special_value() {
        let want = PI * PI / 15.0 - phi().ln().powi(2);
        assert!((dilog(phi().powi(-2)).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn dilog_at_one_half() {
        let want = PI * PI / 12.0 - 0.5 * 2f64.ln().powi(2);
        assert!((dilog(0.5).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn dilog_rejects_out_of_range() {
        assert!(dilog(1.0).is_err());
        assert!(dilog(-1.5).is_err());
    }

    #[test]
    fn complex_dilog_agrees_with_real_on_the_axis() {
        let z = Complex64::new(0.37, 0.0);
        let d = dilog_complex(z);
        assert!((d.re - dilog(0.37).unwrap()).abs() < 1e-14);
        assert!(d.im.abs() < 1e-15);
    }

    #[test]
    fn scaled_quantum_dilog_approaches_dilog() {
        let eps: f64 = 1e-4;
        let x = Complex64::new(0.5, 0.0);
        let q = Complex64::new((-eps).exp(), 0.0);
        let qd = quantum_dilog(x, q, 1e-13).unwrap();
        let scaled = eps * qd.re;
        let plain = dilog(0.5).unwrap();
        assert!((scaled / plain - 1.0).abs() < 1e-4, "scaled {scaled} vs {plain}");
    }

    #[test]
    fn quantum_dilog_laurent_expansion_holds() {
        let eps: f64 = 1e-3;
        let x = 0.3f64;
        let q = Complex64::new((-eps).exp(), 0.0);
        let shifted = Complex64::new((-eps).exp() * x, 0.0);
        let qd = quantum_dilog(shifted, q, 1e-14).unwrap().re;
        let expansion = dilog(x).unwrap() / eps + 0.5 * (1.0 - x).ln();
        assert!((qd - expansion).abs() <= 10.0 * eps, "qd {qd} vs expansion {expansion}");
    }

    #[test]
    fn quantum_dilog_rejects_divergent_arguments() {
        let half = Complex64::new(0.5, 0.0);
        let unit = Complex64::new(1.0, 0.0);
        assert!(quantum_dilog(unit, half, 1e-12).is_err());
        assert!(quantum_dilog(half, unit, 1e-12).is_err());
    }
}
