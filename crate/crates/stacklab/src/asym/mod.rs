//! Asymptotic main terms, the Tauberian transfer between the two
//! asymptotic shapes, and floating-point evaluation of the series at
//! `q = e^-eps`.

use std::f64::consts::PI;

use crate::genfun::Variant;
use crate::series::PowerSeries;
use crate::{Error, Result};

pub mod logreal;
pub mod saddle;
pub mod special;

pub use logreal::LogReal;
pub use saddle::{
    a_from_h, a_mainterm, contour_a, f, f_prime, f_second, golden_ratio, hs_over_h, saddle_data,
    SaddleData,
};
pub use special::{dilog, quantum_dilog};

/// Coefficient asymptotics in the shape `C * n^-alpha * e^(pi sqrt(beta n))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainTerm {
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Series asymptotics near `q = 1` in the shape
/// `lambda * eps^alpha * e^(A / eps)` as `eps -> 0+`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsAsym {
    pub lambda: f64,
    pub alpha: f64,
    pub a: f64,
}

/// The catalog of known coefficient main terms.  `P` shares the partition
/// entry with `Gs`; the false theta function has no entry.
pub fn main_term(v: Variant) -> Result<MainTerm> {
    let phi = golden_ratio();
    let entry = match v {
        Variant::S | Variant::Ss => MainTerm {
            c: 3f64.powf(-0.75) / 8.0,
            alpha: 1.25,
            beta: 4.0 / 3.0,
        },
        Variant::G => MainTerm {
            c: (8.0 * 3f64.sqrt()).recip(),
            alpha: 1.0,
            beta: 2.0 / 3.0,
        },
        Variant::Gs | Variant::P => MainTerm {
            c: (4.0 * 3f64.sqrt()).recip(),
            alpha: 1.0,
            beta: 2.0 / 3.0,
        },
        Variant::H => MainTerm {
            c: phi.recip() / (2.0 * 2f64.sqrt() * 5f64.powf(0.75)),
            alpha: 1.0,
            beta: 0.8,
        },
        Variant::Hs => MainTerm {
            c: (2.0 * 2f64.sqrt() * 5f64.powf(0.75)).recip(),
            alpha: 1.0,
            beta: 0.8,
        },
        Variant::D => MainTerm {
            c: 2f64.powf(-3.25) * 3f64.powf(-0.25),
            alpha: 0.75,
            beta: 2.0 / 3.0,
        },
        Variant::Dm => MainTerm {
            c: 1.0 / 16.0,
            alpha: 1.0,
            beta: 1.0,
        },
        Variant::FPhi | Variant::F0 => MainTerm {
            c: (8.0 * 3f64.sqrt()).recip(),
            alpha: 1.0,
            beta: 2.0 / 3.0,
        },
        Variant::L => {
            return Err(Error::Domain(
                "the false theta series has no coefficient main term".into(),
            ))
        }
    };
    Ok(entry)
}

/// The catalog of known series asymptotics at `q = e^-eps`.
pub fn eps_asym(v: Variant) -> Result<EpsAsym> {
    let phi = golden_ratio();
    let entry = match v {
        Variant::S | Variant::Ss => EpsAsym {
            lambda: (4.0 * PI).recip(),
            alpha: 1.0,
            a: PI * PI / 3.0,
        },
        Variant::Dm => EpsAsym {
            lambda: (4.0 * PI.sqrt()).recip(),
            alpha: 0.5,
            a: PI * PI / 4.0,
        },
        Variant::H => EpsAsym {
            lambda: phi.recip() / ((2.0 * PI).sqrt() * 5f64.powf(0.25)),
            alpha: 0.5,
            a: PI * PI / 5.0,
        },
        Variant::Hs => EpsAsym {
            lambda: ((2.0 * PI).sqrt() * 5f64.powf(0.25)).recip(),
            alpha: 0.5,
            a: PI * PI / 5.0,
        },
        _ => {
            return Err(Error::Domain(format!(
                "no series asymptotic on file for variant {v}"
            )))
        }
    };
    Ok(entry)
}

/// Evaluates a main term at `n` in log space.
pub fn main_term_value(mt: &MainTerm, n: u64) -> LogReal {
    assert!(n >= 1, "main terms are evaluated at n >= 1");
    let nf = n as f64;
    LogReal::from_ln(1, mt.c.ln() - mt.alpha * nf.ln() + PI * (mt.beta * nf).sqrt())
}

/// Transfers a series asymptotic to a coefficient asymptotic: a power
/// series with weakly increasing nonnegative coefficients whose sum behaves
/// like `lambda eps^alpha e^(A/eps)` has coefficients behaving like
/// `C n^-alpha' e^(pi sqrt(beta n))` with the constants produced here.
pub fn ingham_transfer(e: &EpsAsym) -> Result<MainTerm> {
    if e.a <= 0.0 {
        return Err(Error::Domain(format!(
            "exponential parameter must be positive, got {}",
            e.a
        )));
    }
    let exponent = e.alpha / 2.0 + 0.25;
    Ok(MainTerm {
        c: e.lambda / (2.0 * PI.sqrt()) * e.a.powf(exponent),
        alpha: e.alpha / 2.0 + 0.75,
        beta: 4.0 * e.a / (PI * PI),
    })
}

/// Exact coefficient at `n` divided by the variant's main-term value,
/// with both sides kept in log space until the final ratio.
pub fn coeff_ratio(v: Variant, n: u64, coeffs: &PowerSeries) -> Result<f64> {
    let mt = main_term(v)?;
    if (n as usize) > coeffs.order() {
        return Err(Error::Domain(format!(
            "coefficient {n} not available at order {}",
            coeffs.order()
        )));
    }
    let c = coeffs.coeff(n as usize);
    let exact = LogReal::from_bigint(c);
    if exact.sign() <= 0 {
        return Err(Error::Domain(format!(
            "ratio needs a positive coefficient, got {c} at n = {n}"
        )));
    }
    Ok(exact.ratio(&main_term_value(&mt, n)))
}

/// `ln(1 - e^-a)` for positive `a`.
fn ln1m_exp(a: f64) -> f64 {
    (-(-a).exp_m1()).ln()
}

/// `ln (q)_inf` at `q = e^-eps`; negative, since every factor is below one.
pub(crate) fn ln_qinf(eps: f64) -> f64 {
    let mut acc = 0.0;
    for j in 1.. {
        let a = j as f64 * eps;
        if (-a).exp() < 1e-18 {
            break;
        }
        acc += ln1m_exp(a);
    }
    acc
}

/// The false theta sum at `q = e^-eps`, a plain alternating series with
/// value in `(0, 1)`.
fn false_theta_value(eps: f64) -> f64 {
    let mut acc = 0.0;
    for n in 1u64.. {
        let e = (n * (n + 1) / 2) as f64 * eps;
        if (-e).exp() < 1e-18 {
            break;
        }
        let term = (-e).exp();
        acc += if n % 2 == 1 { term } else { -term };
    }
    acc
}

/// Relative floor for stopping a positive term sum: `ln(1e-15)`.
const LN_REL_TOL: f64 = -34.538776394910684;

/// `1 + sum_{m>=1} q^lead(m) / ((q)_{m-1}^2 (1 - q^m))` at `q = e^-eps`.
/// Terms can grow before they decay, so the loop only stops once a term is
/// both below the relative floor and smaller than its predecessor.
fn eval_no_summit(eps: f64, lead: impl Fn(u64) -> f64) -> LogReal {
    let mut acc = LogReal::one();
    let mut ln_poch = 0.0;
    let mut prev = f64::INFINITY;
    for m in 1..10_000_000u64 {
        if m >= 2 {
            ln_poch += ln1m_exp((m - 1) as f64 * eps);
        }
        let ln_term = -eps * lead(m) - 2.0 * ln_poch - ln1m_exp(m as f64 * eps);
        acc = acc + LogReal::from_ln(1, ln_term);
        if ln_term < prev && ln_term < acc.ln_magnitude() + LN_REL_TOL {
            break;
        }
        prev = ln_term;
    }
    acc
}

/// `sum_{m>=0} q^lead(m) / (q)_m^2` at `q = e^-eps`.
fn eval_with_summit(eps: f64, lead: impl Fn(u64) -> f64) -> LogReal {
    let mut acc = LogReal::zero();
    let mut ln_poch = 0.0;
    let mut prev = f64::INFINITY;
    for m in 0..10_000_000u64 {
        if m >= 1 {
            ln_poch += ln1m_exp(m as f64 * eps);
        }
        let ln_term = -eps * lead(m) - 2.0 * ln_poch;
        acc = acc + LogReal::from_ln(1, ln_term);
        if ln_term < prev && ln_term < acc.ln_magnitude() + LN_REL_TOL {
            break;
        }
        prev = ln_term;
    }
    acc
}

/// `sum_{m>=0} q^(m+1) (-q)_m^2` at `q = e^-eps`.
fn eval_strict(eps: f64) -> LogReal {
    let mut acc = LogReal::zero();
    let mut ln_poch = 0.0;
    let mut prev = f64::INFINITY;
    for m in 0..10_000_000u64 {
        if m >= 1 {
            ln_poch += (m as f64 * -eps).exp().ln_1p();
        }
        let ln_term = -eps * (m + 1) as f64 + 2.0 * ln_poch;
        acc = acc + LogReal::from_ln(1, ln_term);
        if ln_term < prev && ln_term < acc.ln_magnitude() + LN_REL_TOL {
            break;
        }
        prev = ln_term;
    }
    acc
}

/// Numerically evaluates a variant's series at `q = e^-eps`.
///
/// The stack, summit-stack, and semi-strict families use their closed
/// product forms; the others sum their defining series with a relative
/// stopping tolerance of `1e-15`.  All accumulation happens in log space.
pub fn eval_genfun(v: Variant, eps: f64) -> LogReal {
    assert!(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
    match v {
        Variant::P => LogReal::from_ln(1, -ln_qinf(eps)),
        Variant::L => LogReal::from_f64(false_theta_value(eps)),
        Variant::S => {
            LogReal::one()
                + LogReal::from_ln(1, false_theta_value(eps).ln() - 2.0 * ln_qinf(eps))
        }
        Variant::Ss => {
            LogReal::from_ln(1, (1.0 - false_theta_value(eps)).ln() - 2.0 * ln_qinf(eps))
        }
        Variant::Dm => {
            let ln = -eps + ln_qinf(2.0 * eps) - (-eps).exp().ln_1p() - 2.0 * ln_qinf(eps);
            LogReal::from_ln(1, ln)
        }
        Variant::G => eval_no_summit(eps, |m| (m * m) as f64),
        Variant::Gs => eval_with_summit(eps, |m| (m * m) as f64),
        Variant::H => eval_no_summit(eps, |m| (m * (m + 1) / 2) as f64),
        Variant::Hs => eval_with_summit(eps, |m| (m * (m + 1) / 2) as f64),
        Variant::FPhi => eval_with_summit(eps, |m| (m * m + m) as f64),
        Variant::F0 => eval_genfun(Variant::Gs, eps) - eval_genfun(Variant::FPhi, eps),
        Variant::D => eval_strict(eps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun;
    use num_bigint::BigInt;

    #[test]
    fn catalog_matches_known_entries() {
        let dm = main_term(Variant::Dm).unwrap();
        assert_eq!(dm, MainTerm { c: 0.0625, alpha: 1.0, beta: 1.0 });
        let gs = main_term(Variant::Gs).unwrap();
        assert!((gs.c - (4.0 * 3f64.sqrt()).recip()).abs() < 1e-16);
        assert_eq!((gs.alpha, gs.beta), (1.0, 2.0 / 3.0));
        assert_eq!(main_term(Variant::P).unwrap(), gs);
        let (h, hs) = (main_term(Variant::H).unwrap(), main_term(Variant::Hs).unwrap());
        assert!((hs.c / h.c - golden_ratio()).abs() < 1e-14);
        assert!(main_term(Variant::L).is_err());
    }

    #[test]
    fn main_term_value_degenerate_and_small_cases() {
        let unit = MainTerm { c: 1.0, alpha: 0.0, beta: 0.0 };
        assert!((main_term_value(&unit, 17).to_f64() - 1.0).abs() < 1e-15);
        let dm4 = main_term_value(&main_term(Variant::Dm).unwrap(), 4);
        let want = 2.0 * PI - 64f64.ln();
        assert!((dm4.ln_magnitude() - want).abs() < 1e-12);
        let ratio = LogReal::from_f64(5.0).ratio(&dm4);
        assert!(ratio.is_finite() && ratio > 0.0);
    }

    #[test]
    fn partition_main_term_overshoots_slightly_at_one_hundred() {
        let p = genfun::series(Variant::P, 100);
        assert_eq!(p.coeff(100), &BigInt::from(190569292u64));
        let mt = main_term_value(&main_term(Variant::Gs).unwrap(), 100);
        let ratio = mt.ratio(&LogReal::from_bigint(p.coeff(100)));
        assert!((1.0..1.1).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn transfer_reproduces_the_coefficient_catalog() {
        for v in [Variant::S, Variant::Ss, Variant::Dm, Variant::H, Variant::Hs] {
            let from_eps = ingham_transfer(&eps_asym(v).unwrap()).unwrap();
            let direct = main_term(v).unwrap();
            assert!(
                (from_eps.c / direct.c - 1.0).abs() < 1e-12,
                "{v}: C {} vs {}",
                from_eps.c,
                direct.c
            );
            assert!((from_eps.alpha - direct.alpha).abs() < 1e-14, "{v} alpha");
            assert!((from_eps.beta / direct.beta - 1.0).abs() < 1e-14, "{v} beta");
        }
    }

    #[test]
    fn transfer_worked_example() {
        let out = ingham_transfer(&EpsAsym { lambda: 1.0, alpha: 0.0, a: PI * PI / 4.0 }).unwrap();
        assert!((out.c - (2.0 * 2f64.sqrt()).recip()).abs() < 1e-14);
        assert!((out.alpha - 0.75).abs() < 1e-15);
        assert!((out.beta - 1.0).abs() < 1e-14);
    }

    #[test]
    fn transfer_rejects_nonpositive_exponential_parameter() {
        assert!(ingham_transfer(&EpsAsym { lambda: 1.0, alpha: 0.0, a: 0.0 }).is_err());
        assert!(eps_asym(Variant::G).is_err());
    }

    #[test]
    fn coefficient_ratio_behaves_at_small_n() {
        let p = genfun::series(Variant::P, 10);
        let r = coeff_ratio(Variant::Gs, 1, &p).unwrap();
        assert!(r.is_finite() && r > 0.0 && r < 1.0, "ratio {r}");
        let d = genfun::series(Variant::D, 10);
        assert!(coeff_ratio(Variant::D, 0, &d).is_err());
        assert!(coeff_ratio(Variant::Gs, 11, &p).is_err());
    }

    #[test]
    fn false_theta_value_near_one_half() {
        let l = eval_genfun(Variant::L, 0.1).to_f64();
        assert!((l - 0.487174).abs() < 1e-4, "L = {l}");
        for eps in [0.1, 0.05, 0.02] {
            let v = eval_genfun(Variant::L, eps).to_f64();
            assert!((v - 0.5).abs() <= eps / 4.0, "L deviates by {} at {eps}", (v - 0.5).abs());
        }
    }

    #[test]
    fn partition_series_matches_eta_inversion_rate() {
        for eps in [0.1, 0.05] {
            let reference =
                LogReal::from_ln(1, 0.5 * (eps / (2.0 * PI)).ln() + PI * PI / (6.0 * eps));
            let ratio = eval_genfun(Variant::P, eps).ratio(&reference);
            let deviation = 1.0 - ratio;
            assert!(deviation.abs() < eps, "deviation {deviation} at {eps}");
            assert!(
                (deviation * 24.0 / eps - 1.0).abs() < 0.05,
                "rate {deviation} at {eps}"
            );
        }
    }

    #[test]
    fn semistrict_series_matches_its_eps_asymptotic() {
        let e = eps_asym(Variant::Dm).unwrap();
        let eps: f64 = 0.05;
        let reference =
            LogReal::from_ln(1, e.lambda.ln() + e.alpha * eps.ln() + e.a / eps);
        let ratio = eval_genfun(Variant::Dm, eps).ratio(&reference);
        assert!((0.9..=1.1).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn numeric_evaluation_agrees_with_exact_partial_sums() {
        let eps = 0.5;
        let order = 250;
        for v in Variant::ALL {
            let exact = genfun::series(v, order);
            let mut sum = LogReal::zero();
            for n in 0..=order {
                let c = LogReal::from_bigint(exact.coeff(n));
                let weight = LogReal::from_ln(1, -eps * n as f64);
                sum = sum + c * weight;
            }
            let direct = eval_genfun(v, eps);
            let ratio = direct.ratio(&sum);
            assert!(
                (ratio - 1.0).abs() < 1e-10,
                "variant {v}: numeric {direct} vs partial sum {sum}"
            );
        }
    }
}
