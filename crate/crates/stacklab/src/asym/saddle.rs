//! Saddle-point data for the shifted-stack contour integral, and three
//! independent routes to the same contour value.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::genfun::Variant;
use crate::{Error, Result};

use super::logreal::LogReal;
use super::special::{dilog_complex, quantum_dilog};
use super::{eval_genfun, ln_qinf};

/// The golden ratio.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Critical-point package for the phase function: the saddle `v`, the
/// phase value and second derivative there, and the height of the
/// integration contour through the saddle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleData {
    pub v: Complex64,
    pub f_v: f64,
    pub fpp_v: f64,
    pub contour_height: f64,
}

/// The phase `f(u) = -2 pi^2 u^2 + (1/2) Li_2(e^(4 pi i u))`, defined for
/// `u` in the upper half-plane.
pub fn f(u: Complex64) -> Complex64 {
    let w = (Complex64::new(0.0, 4.0 * PI) * u).exp();
    -2.0 * PI * PI * u * u + 0.5 * dilog_complex(w)
}

/// `f'(u) = 2 pi i (2 pi i u - log(1 - e^(4 pi i u)))`.
pub fn f_prime(u: Complex64) -> Complex64 {
    let w = (Complex64::new(0.0, 4.0 * PI) * u).exp();
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    two_pi_i * (two_pi_i * u - (1.0 - w).ln())
}

/// `f''(u) = -4 pi^2 (1 + 2 e^(4 pi i u) / (1 - e^(4 pi i u)))`.
pub fn f_second(u: Complex64) -> Complex64 {
    let w = (Complex64::new(0.0, 4.0 * PI) * u).exp();
    -4.0 * PI * PI * (1.0 + 2.0 * w / (1.0 - w))
}

/// Evaluates the saddle point `v = (i / 2 pi) log(phi)` and the phase data
/// there from the defining formulas.
pub fn saddle_data() -> SaddleData {
    let height = golden_ratio().ln() / (2.0 * PI);
    let v = Complex64::new(0.0, height);
    let f_v = f(v);
    let fpp_v = f_second(v);
    debug_assert!(f_v.im.abs() < 1e-14);
    debug_assert!(fpp_v.im.abs() < 1e-12);
    SaddleData {
        v,
        f_v: f_v.re,
        fpp_v: fpp_v.re,
        contour_height: height,
    }
}

fn integrand(t: f64, height: f64, eps: f64) -> Result<Complex64> {
    let u = Complex64::new(t, height);
    let x = (Complex64::new(0.0, 2.0 * PI) * u).exp();
    let q2 = (-2.0 * eps).exp();
    let li = quantum_dilog(x * x * q2, Complex64::new(q2, 0.0), 1e-14)?;
    let exponent = -2.0 * PI * PI / eps * u * u + Complex64::new(0.0, PI) * u + li;
    Ok(exponent.exp())
}

fn simpson_contour(eps: f64, height: f64, t_max: f64, nodes: usize) -> Result<Complex64> {
    debug_assert!(nodes % 2 == 1, "composite Simpson needs an odd node count");
    let h = 2.0 * t_max / (nodes - 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..nodes {
        let t = -t_max + i as f64 * h;
        let weight = if i == 0 || i == nodes - 1 {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        sum += weight * integrand(t, height, eps)?;
    }
    Ok(sum * (h / 3.0))
}

/// Direct quadrature of the contour integral along the horizontal line
/// through the saddle.  The integrand decays like `e^(-2 pi^2 t^2 / eps)`,
/// so the window `|t| <= 3 sqrt(eps)` truncates below any working
/// tolerance; the node count is doubled once to confirm convergence.
pub fn contour_a(eps: f64) -> Result<f64> {
    assert!(eps > 0.0 && eps <= 0.2, "eps must lie in (0, 0.2]");
    let height = golden_ratio().ln() / (2.0 * PI);
    let t_max = 3.0 * eps.sqrt();
    let coarse = simpson_contour(eps, height, t_max, 2001)?;
    let fine = simpson_contour(eps, height, t_max, 4001)?;
    let change = (fine - coarse).norm() / fine.norm();
    if change > 1e-6 {
        return Err(Error::NoConvergence(format!(
            "contour quadrature at eps = {eps} still changed by a relative {change:.3e} \
             after doubling from 2001 to 4001 nodes"
        )));
    }
    let value = -(2.0 * PI / eps).sqrt() * fine;
    if value.im.abs() > 1e-8 * value.re.abs() {
        return Err(Error::NoConvergence(format!(
            "contour quadrature at eps = {eps} kept an imaginary residue {:.3e}",
            value.im
        )));
    }
    Ok(value.re)
}

/// The same contour value recovered from the series side, by inverting
/// `H(q) = 1 - q^(7/8) A(q) / (q)_inf` at `q = e^-eps`.
pub fn a_from_h(eps: f64) -> f64 {
    assert!(eps > 0.0 && eps <= 0.2, "eps must lie in (0, 0.2]");
    let h = eval_genfun(Variant::H, eps);
    let scale = LogReal::from_ln(1, ln_qinf(eps) + 7.0 * eps / 8.0);
    ((LogReal::one() - h) * scale).to_f64()
}

/// The leading saddle-point approximation
/// `-phi^-1 5^(-1/4) e^(pi^2 / (30 eps))`, kept in log form because the
/// exponential dwarfs `f64` range for small `eps`.
pub fn a_mainterm(eps: f64) -> LogReal {
    assert!(eps > 0.0, "eps must be positive");
    let ln = PI * PI / (30.0 * eps) - golden_ratio().ln() - 5f64.ln() / 4.0;
    LogReal::from_ln(-1, ln)
}

/// Ratio of the summit and summit-free shifted-stack series at
/// `q = e^-eps`; tends to the golden ratio as `eps` shrinks.
pub fn hs_over_h(eps: f64) -> f64 {
    assert!(eps > 0.0 && eps <= 0.2, "eps must lie in (0, 0.2]");
    eval_genfun(Variant::Hs, eps).ratio(&eval_genfun(Variant::H, eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saddle_point_sits_at_the_golden_ratio() {
        let sd = saddle_data();
        let phi_inv = golden_ratio().recip();
        let at_v = (Complex64::new(0.0, 2.0 * PI) * sd.v).exp();
        assert!((at_v.re - phi_inv).abs() < 1e-14);
        assert!(at_v.im.abs() < 1e-14);
        assert!((sd.contour_height - golden_ratio().ln() / (2.0 * PI)).abs() < 1e-16);
    }

    #[test]
    fn phase_value_at_saddle() {
        let sd = saddle_data();
        assert!((sd.f_v - PI * PI / 30.0).abs() < 1e-12, "f(v) = {}", sd.f_v);
    }

    #[test]
    fn second_derivative_at_saddle() {
        let sd = saddle_data();
        let want = -4.0 * PI * PI * 5f64.sqrt();
        assert!((sd.fpp_v - want).abs() < 1e-10, "f''(v) = {}", sd.fpp_v);
    }

    #[test]
    fn derivative_vanishes_at_saddle() {
        let sd = saddle_data();
        assert!(f_prime(sd.v).norm() < 1e-12);
    }

    #[test]
    fn central_differences_confirm_the_critical_point() {
        let sd = saddle_data();
        let h = 1e-6;
        let numeric = (f(sd.v + Complex64::new(h, 0.0)) - f(sd.v - Complex64::new(h, 0.0)))
            / Complex64::new(2.0 * h, 0.0);
        assert!(numeric.norm() < 1e-8, "central difference {numeric}");
    }

    #[test]
    fn quadratic_expansion_matches_near_the_saddle() {
        let sd = saddle_data();
        let delta = 1e-3;
        let shifted = f(sd.v + Complex64::new(delta, 0.0));
        let predicted = sd.f_v + 0.5 * sd.fpp_v * delta * delta;
        assert!((shifted.re - predicted).abs() < 1e-5);
    }

    #[test]
    fn contour_value_is_negative_and_matches_series_route() {
        let a = contour_a(0.05).unwrap();
        assert!(a < 0.0);
        let ratio = a / a_from_h(0.05);
        assert!((0.98..=1.02).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn leading_term_log_form() {
        let lt = a_mainterm(0.05);
        assert_eq!(lt.sign(), -1);
        let want = PI * PI / 1.5 - golden_ratio().ln() - 5f64.ln() / 4.0;
        assert!((lt.ln_magnitude() - want).abs() < 1e-12);
    }

    #[test]
    fn series_ratio_approaches_the_golden_ratio() {
        let r = hs_over_h(0.02);
        assert!((r - golden_ratio()).abs() < 0.08, "ratio {r}");
    }
}
