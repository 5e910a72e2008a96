//! Sign-and-log representation for quantities far outside `f64` range.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_bigint::Sign as BigSign;
use num_traits::ToPrimitive;

/// A real number stored as `sign * e^ln_magnitude`.
///
/// Multiplication and division are exact in log space (up to one floating
/// rounding of the stored logarithm).  Addition of same-sign values whose
/// magnitudes lie within `e^30` of each other is accurate to a relative
/// error of about `1e-14`; a sum that cancels exactly returns zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogReal {
    sign: i8,
    ln_mag: f64,
}

impl LogReal {
    pub fn zero() -> Self {
        LogReal {
            sign: 0,
            ln_mag: f64::NEG_INFINITY,
        }
    }

    pub fn one() -> Self {
        LogReal { sign: 1, ln_mag: 0.0 }
    }

    /// Builds from an explicit sign and log-magnitude.  A zero sign forces
    /// the canonical zero.
    pub fn from_ln(sign: i8, ln_mag: f64) -> Self {
        assert!((-1..=1).contains(&(sign as i32)), "sign must be -1, 0, or +1");
        if sign == 0 {
            Self::zero()
        } else {
            LogReal { sign, ln_mag }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            LogReal {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_mag: x.abs().ln(),
            }
        }
    }

    /// Exact sign and logarithm of an arbitrarily large integer.  The top 53
    /// bits set the mantissa of the logarithm, so the result is correct to
    /// f64 precision regardless of the integer's size.
    pub fn from_bigint(x: &BigInt) -> Self {
        let sign = match x.sign() {
            BigSign::Minus => -1,
            BigSign::NoSign => return Self::zero(),
            BigSign::Plus => 1,
        };
        let mag = x.magnitude();
        let bits = mag.bits();
        let ln_mag = if bits <= 53 {
            mag.to_f64().expect("fits in f64").ln()
        } else {
            let shift = (bits - 53) as usize;
            let top = (mag >> shift).to_f64().expect("53 bits fit in f64");
            top.ln() + shift as f64 * std::f64::consts::LN_2
        };
        LogReal { sign, ln_mag }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ln_magnitude(&self) -> f64 {
        self.ln_mag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Converts back to `f64`; overflows to infinity past `e^709`.
    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.ln_mag.exp()
    }

    pub fn abs(&self) -> Self {
        LogReal {
            sign: self.sign.abs(),
            ln_mag: self.ln_mag,
        }
    }

    /// `self / other` as a plain float, usable even when both operands are
    /// individually far outside `f64` range.
    pub fn ratio(&self, other: &LogReal) -> f64 {
        assert!(other.sign != 0, "ratio to zero");
        if self.sign == 0 {
            return 0.0;
        }
        (self.sign * other.sign) as f64 * (self.ln_mag - other.ln_mag).exp()
    }
}

impl Neg for LogReal {
    type Output = LogReal;
    fn neg(self) -> LogReal {
        LogReal {
            sign: -self.sign,
            ln_mag: self.ln_mag,
        }
    }
}

impl Mul for LogReal {
    type Output = LogReal;
    fn mul(self, rhs: LogReal) -> LogReal {
        if self.sign == 0 || rhs.sign == 0 {
            return LogReal::zero();
        }
        LogReal {
            sign: self.sign * rhs.sign,
            ln_mag: self.ln_mag + rhs.ln_mag,
        }
    }
}

impl Div for LogReal {
    type Output = LogReal;
    fn div(self, rhs: LogReal) -> LogReal {
        assert!(rhs.sign != 0, "division by zero");
        if self.sign == 0 {
            return LogReal::zero();
        }
        LogReal {
            sign: self.sign * rhs.sign,
            ln_mag: self.ln_mag - rhs.ln_mag,
        }
    }
}

impl Add for LogReal {
    type Output = LogReal;
    fn add(self, rhs: LogReal) -> LogReal {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.ln_mag >= rhs.ln_mag {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let d = small.ln_mag - big.ln_mag;
        if self.sign == rhs.sign {
            LogReal {
                sign: big.sign,
                ln_mag: big.ln_mag + d.exp().ln_1p(),
            }
        } else {
            let residue = -d.exp_m1();
            if residue == 0.0 {
                LogReal::zero()
            } else {
                LogReal {
                    sign: big.sign,
                    ln_mag: big.ln_mag + residue.ln(),
                }
            }
        }
    }
}

impl Sub for LogReal {
    type Output = LogReal;
    fn sub(self, rhs: LogReal) -> LogReal {
        self + (-rhs)
    }
}

impl fmt::Display for LogReal {
    /// Base-10 mantissa/exponent form, `m.mmmmmm e±k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0.000000 e+0");
        }
        let log10 = self.ln_mag / std::f64::consts::LN_10;
        let mut k = log10.floor();
        let mut mantissa = 10f64.powf(log10 - k);
        if mantissa >= 9.9999995 {
            mantissa /= 10.0;
            k += 1.0;
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}{mantissa:.6} e{k:+}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn round_trips_through_f64() {
        for x in [1.0, -2.5, 1e-30, 3.7e15, -1.0] {
            let lr = LogReal::from_f64(x);
            assert!((lr.to_f64() - x).abs() <= 1e-13 * x.abs());
        }
        assert_eq!(LogReal::from_f64(0.0), LogReal::zero());
        assert_eq!(LogReal::zero().to_f64(), 0.0);
    }

    #[test]
    fn huge_products_stay_finite_in_log_space() {
        let a = LogReal::from_ln(1, 5000.0);
        let b = LogReal::from_ln(-1, 4990.0);
        let prod = a * b;
        assert_eq!(prod.sign(), -1);
        assert_eq!(prod.ln_magnitude(), 9990.0);
        assert!((a.ratio(&b) - -(10f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn opposite_sign_add_cancels_to_difference() {
        let a = LogReal::from_f64(5.0);
        let b = LogReal::from_f64(-3.0);
        assert!(((a + b).to_f64() - 2.0).abs() < 1e-14);
        assert_eq!((a + -a).sign(), 0);
        assert!(((a - b).to_f64() - 8.0).abs() < 1e-14);
    }

    #[test]
    fn bigint_log_matches_known_values() {
        let x = BigInt::from(1024);
        assert!((LogReal::from_bigint(&x).ln_magnitude() - 1024f64.ln()).abs() < 1e-14);
        let big: BigInt = BigInt::from(10).pow(200);
        let expect = 200.0 * std::f64::consts::LN_10;
        assert!((LogReal::from_bigint(&big).ln_magnitude() - expect).abs() < 1e-10 * expect);
        assert_eq!(LogReal::from_bigint(&BigInt::from(-7)).sign(), -1);
        assert!(LogReal::from_bigint(&BigInt::from(0)).is_zero());
    }

    #[test]
    fn display_uses_mantissa_exponent_form() {
        assert_eq!(format!("{}", LogReal::from_f64(1.0)), "1.000000 e+0");
        assert_eq!(format!("{}", LogReal::from_f64(-250.0)), "-2.500000 e+2");
        assert_eq!(format!("{}", LogReal::from_f64(0.0625)), "6.250000 e-2");
        assert_eq!(format!("{}", LogReal::zero()), "0.000000 e+0");
        let huge = format!("{}", LogReal::from_ln(1, 10000.0));
        assert!(huge.starts_with("8.806"), "unexpected mantissa in {huge}");
        assert!(huge.ends_with(" e+4342"), "unexpected exponent in {huge}");
    }

    proptest! {
        #[test]
        fn add_matches_f64_for_moderate_magnitudes(a in -1e12f64..1e12, b in -1e12f64..1e12) {
            let sum = (LogReal::from_f64(a) + LogReal::from_f64(b)).to_f64();
            let expect = a + b;
            prop_assert!((sum - expect).abs() <= 1e-13 * (a.abs() + b.abs()).max(1e-300));
        }

        #[test]
        fn mul_div_match_f64(a in 1e-6f64..1e6, b in 1e-6f64..1e6) {
            let (la, lb) = (LogReal::from_f64(a), LogReal::from_f64(b));
            prop_assert!(((la * lb).to_f64() - a * b).abs() <= 1e-12 * (a * b));
            prop_assert!(((la / lb).to_f64() - a / b).abs() <= 1e-12 * (a / b));
        }
    }
}
