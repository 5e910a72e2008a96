//! Dense truncated power series over arbitrary-precision integers.
//!
//! A [`PowerSeries`] of order `N` stores the exact coefficients of
//! `q^0 .. q^N`; every operation is exact modulo `q^{N+1}`.  Operands of a
//! binary operation must share the same order, and order mismatches panic:
//! silently truncating to the shorter operand would let a caller mistake a
//! low-precision result for a high-precision one.
//!
//! Invariants:
//! * `coeffs.len() == order + 1`, always dense (explicit zeros kept);
//! * no floating point anywhere in this module;
//! * dividing by a binomial `1 - q^k` and multiplying back is the identity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

mod bivariate;
pub use bivariate::BivariateSeries;

/// Sign of the `q`-power inside a binomial factor `1 ± q^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Truncated power series in `q` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series `1` of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The single term `c * q^exp`.  An exponent beyond the order truncates
    /// to the zero series.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Builds a series from explicit coefficients; the order is
    /// `coeffs.len() - 1`.
    ///
    /// # Panics
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        PowerSeries { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Truncation order `N`; coefficients of `q^0 .. q^N` are exact.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `q^n`.
    ///
    /// # Panics
    /// Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(n <= self.order(), "coefficient index {n} beyond order {}", self.order());
        &self.coeffs[n]
    }

    /// All coefficients in exponent order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// A copy cut down to a smaller order.
    ///
    /// # Panics
    /// Panics if `new_order` exceeds the current order.
    pub fn truncated(&self, new_order: usize) -> Self {
        assert!(
            new_order <= self.order(),
            "cannot truncate order {} up to {new_order}",
            self.order()
        );
        PowerSeries {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    /// Multiplication by `q^k` at fixed order; the top `k` coefficients fall
    /// off the end.
    pub fn shifted(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = Self::zero(self.order());
        for i in 0..n.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Adds `q^shift * other` into `self` in place.
    pub fn add_shifted(&mut self, other: &PowerSeries, shift: usize) {
        assert_eq!(self.order(), other.order(), "order mismatch in add_shifted");
        let n = self.coeffs.len();
        for i in 0..n.saturating_sub(shift) {
            self.coeffs[i + shift] += &other.coeffs[i];
        }
    }

    /// Subtracts `q^shift * other` from `self` in place.
    pub fn sub_shifted(&mut self, other: &PowerSeries, shift: usize) {
        assert_eq!(self.order(), other.order(), "order mismatch in sub_shifted");
        let n = self.coeffs.len();
        for i in 0..n.saturating_sub(shift) {
            self.coeffs[i + shift] -= &other.coeffs[i];
        }
    }

    /// In-place multiplication by the binomial `1 + sign * q^exp`.
    ///
    /// # Panics
    /// Panics if `exp == 0`.
    pub fn mul_binomial(&mut self, exp: usize, sign: Sign) {
        assert!(exp >= 1, "binomial exponent must be positive");
        for i in (exp..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] += &lo[i - exp],
                Sign::Minus => hi[0] -= &lo[i - exp],
            }
        }
    }

    /// In-place division by the binomial `1 + sign * q^exp`, the exact
    /// inverse of [`mul_binomial`](Self::mul_binomial).
    ///
    /// # Panics
    /// Panics if `exp == 0`.
    pub fn div_binomial(&mut self, exp: usize, sign: Sign) {
        assert!(exp >= 1, "binomial exponent must be positive");
        for i in exp..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] -= &lo[i - exp],
                Sign::Minus => hi[0] += &lo[i - exp],
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&mut self, c: &BigInt) {
        for x in &mut self.coeffs {
            *x *= c;
        }
    }

    /// The multiplicative inverse, when the constant term is `+1` or `-1`.
    ///
    /// Uses the standard recurrence `b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}`.
    /// Time O(N^2) coefficient multiplications.
    pub fn inverse(&self) -> Result<PowerSeries> {
        let a0 = &self.coeffs[0];
        if !(a0.is_one() || (-a0).is_one()) {
            return Err(Error::NonUnitConstant(a0.to_string()));
        }
        let n = self.coeffs.len();
        let mut inv = vec![BigInt::zero(); n];
        inv[0] = a0.clone();
        for m in 1..n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv[m - k];
                }
            }
            inv[m] = if a0.is_one() { -acc } else { acc };
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// Partial sums: coefficient `n` of the result is the sum of
    /// coefficients `0..=n` of the input.  Identical to dividing by
    /// `1 - q`.
    pub fn cumsum(&self) -> PowerSeries {
        let mut out = self.clone();
        out.div_binomial(1, Sign::Minus);
        out
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.order(), rhs.order(), "cannot add series of different orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.order(), rhs.order(), "cannot subtract series of different orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Truncated Cauchy product.  Time O(N^2) coefficient multiplications.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.order(), rhs.order(), "cannot multiply series of different orders");
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PowerSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        let decimal: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        st.serialize_field("coeffs", &decimal)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: usize,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "series of order {} must carry {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| BigInt::from_str(s).map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(PowerSeries { coeffs })
    }
}

/// Exact truncated product of binomials
/// `(1 + sign * q^(offset + j*step))` for `j = 0, 1, ...`.
///
/// `count` limits the number of factors; `None` keeps multiplying factors
/// until their exponent exceeds `order`, which is the truncation of the
/// corresponding infinite product.  With `count = Some(0)` the empty product
/// `1` is returned.
///
/// Errors with [`Error::ZeroConstant`] when `offset == 0` with a minus sign
/// would put the factor `1 - q^0 = 0` into a nonempty product.
///
/// # Panics
/// Panics if `step == 0`.
pub fn pochhammer(
    sign: Sign,
    offset: usize,
    count: Option<usize>,
    step: usize,
    order: usize,
) -> Result<PowerSeries> {
    assert!(step >= 1, "pochhammer step must be positive");
    if sign == Sign::Minus && offset == 0 && count != Some(0) {
        return Err(Error::ZeroConstant);
    }
    let mut prod = PowerSeries::one(order);
    let mut j = 0usize;
    loop {
        if let Some(c) = count {
            if j >= c {
                break;
            }
        }
        let exp = offset + j * step;
        if exp > order {
            if count.is_none() {
                break;
            }
            // Finite products keep iterating only on paper: the remaining
            // factors are congruent to 1 at this order.
            break;
        }
        if exp == 0 {
            prod.scale(&BigInt::from(2));
        } else {
            prod.mul_binomial(exp, sign);
        }
        j += 1;
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Partition numbers by the pentagonal-number recurrence, kept
    /// independent of the series machinery it checks.
    pub(crate) fn partition_numbers(order: usize) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); order + 1];
        p[0] = BigInt::one();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > n {
                    break;
                }
                let sign_plus = k % 2 == 1;
                for g in [g1, g2] {
                    if g as usize <= n {
                        if sign_plus {
                            acc += &p[n - g as usize];
                        } else {
                            acc -= &p[n - g as usize];
                        }
                    }
                }
                k += 1;
            }
            p[n] = acc;
        }
        p
    }

    /// Coefficients of `(q;q)_inf` straight from the pentagonal number
    /// theorem: `sum_k (-1)^k q^(k(3k-1)/2)` over all integers `k`.
    fn euler_product_coeffs(order: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > order {
                break;
            }
            let v = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
            c[g1] += &v;
            if g2 <= order {
                c[g2] += &v;
            }
        }
        c
    }

    fn qq_inf(order: usize) -> PowerSeries {
        pochhammer(Sign::Minus, 1, None, 1, order).unwrap()
    }

    #[test]
    fn euler_product_matches_pentagonal_theorem() {
        let prod = qq_inf(40);
        assert_eq!(prod.coeffs(), &euler_product_coeffs(40)[..]);
        assert_eq!(
            prod.truncated(6),
            PowerSeries::from_i64s(&[1, -1, -1, 0, 0, 1, 0])
        );
    }

    #[test]
    fn product_of_partition_series_squares() {
        let p = PowerSeries::from_coeffs(partition_numbers(5));
        let sq = &p * &p;
        assert_eq!(sq, PowerSeries::from_i64s(&[1, 2, 5, 10, 20, 36]));
    }

    #[test]
    fn inverse_of_euler_product_counts_partitions() {
        let inv = qq_inf(30).inverse().unwrap();
        assert_eq!(inv.coeffs(), &partition_numbers(30)[..]);
    }

    #[test]
    fn inverse_rejects_non_unit_constant() {
        let s = PowerSeries::from_i64s(&[2, 1, 1]);
        assert_eq!(s.inverse(), Err(Error::NonUnitConstant("2".into())));
        let z = PowerSeries::from_i64s(&[0, 1]);
        assert!(z.inverse().is_err());
    }

    #[test]
    fn negative_unit_constant_inverts() {
        let s = PowerSeries::from_i64s(&[-1, 3, -2]);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, PowerSeries::one(2));
    }

    #[test]
    fn finite_pochhammer_small_case() {
        // (q;q)_2 = (1-q)(1-q^2)
        let p = pochhammer(Sign::Minus, 1, Some(2), 1, 3).unwrap();
        assert_eq!(p, PowerSeries::from_i64s(&[1, -1, -1, 1]));
    }

    #[test]
    fn pochhammer_zero_constant_is_rejected() {
        assert_eq!(
            pochhammer(Sign::Minus, 0, None, 1, 4),
            Err(Error::ZeroConstant)
        );
        assert_eq!(
            pochhammer(Sign::Minus, 0, Some(1), 1, 4),
            Err(Error::ZeroConstant)
        );
        // The empty product is exempt.
        assert_eq!(
            pochhammer(Sign::Minus, 0, Some(0), 1, 4).unwrap(),
            PowerSeries::one(4)
        );
    }

    #[test]
    fn pochhammer_plus_sign_at_zero_doubles() {
        // (1 + q^0) * (1 + q) = 2 + 2q
        let p = pochhammer(Sign::Plus, 0, Some(2), 1, 1).unwrap();
        assert_eq!(p, PowerSeries::from_i64s(&[2, 2]));
    }

    #[test]
    fn euler_odd_even_identity() {
        // (-q;q)_inf * (q;q^2)_inf = 1
        let a = pochhammer(Sign::Plus, 1, None, 1, 30).unwrap();
        let b = pochhammer(Sign::Minus, 1, None, 2, 30).unwrap();
        assert_eq!(&a * &b, PowerSeries::one(30));
    }

    #[test]
    fn cumsum_examples() {
        assert_eq!(
            PowerSeries::from_i64s(&[0, -1]).cumsum(),
            PowerSeries::from_i64s(&[0, -1])
        );
        assert_eq!(
            PowerSeries::from_i64s(&[1, 1, 2, 3]).cumsum(),
            PowerSeries::from_i64s(&[1, 2, 4, 7])
        );
    }

    #[test]
    fn shift_drops_tail_and_monomial_truncates() {
        let s = PowerSeries::from_i64s(&[1, 2, 3]);
        assert_eq!(s.shifted(1), PowerSeries::from_i64s(&[0, 1, 2]));
        assert_eq!(s.shifted(5), PowerSeries::zero(2));
        assert_eq!(PowerSeries::monomial(7, 9, 3), PowerSeries::zero(3));
    }

    #[test]
    fn json_round_trip_and_shape() {
        let s = qq_inf(6);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"order":6,"coeffs":["1","-1","-1","0","0","1","0"]}"#
        );
        let back: PowerSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_rejects_inconsistent_length() {
        let bad = r#"{"order":3,"coeffs":["1","2"]}"#;
        assert!(serde_json::from_str::<PowerSeries>(bad).is_err());
    }

    #[test]
    #[should_panic(expected = "different orders")]
    fn order_mismatch_panics() {
        let _ = &PowerSeries::zero(3) + &PowerSeries::zero(4);
    }

    #[test]
    fn display_reads_naturally() {
        let s = PowerSeries::from_i64s(&[1, 0, -2]);
        assert_eq!(format!("{s}"), "1 + -2*q^2 + O(q^3)");
    }

    fn small_series() -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec(-6i64..=6, 1..=12).prop_map(|v| PowerSeries::from_i64s(&v))
    }

    fn unit_series() -> impl Strategy<Value = PowerSeries> {
        (prop::bool::ANY, prop::collection::vec(-6i64..=6, 0..=11)).prop_map(|(neg, tail)| {
            let mut v = vec![if neg { -1 } else { 1 }];
            v.extend(tail);
            PowerSeries::from_i64s(&v)
        })
    }

    proptest! {
        #[test]
        fn add_commutes(a in small_series(), b in small_series()) {
            let (a, b) = equalize(a, b);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_commutes(a in small_series(), b in small_series()) {
            let (a, b) = equalize(a, b);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in small_series(), b in small_series(), c in small_series()) {
            let (a, b) = equalize(a, b);
            let (b, c) = equalize(b, c);
            let (a, c2) = equalize(a, c.clone());
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c2));
        }

        #[test]
        fn mul_associates(a in small_series(), b in small_series(), c in small_series()) {
            let (a, b) = equalize(a, b);
            let (b, c) = equalize(b, c);
            let (a, c2) = equalize(a, c);
            prop_assert_eq!(&(&a * &b) * &c2, &a * &(&b * &c2));
        }

        #[test]
        fn inverse_round_trip(a in unit_series()) {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, PowerSeries::one(a.order()));
        }

        #[test]
        fn binomial_div_then_mul_is_identity(a in small_series(), exp in 1usize..=5, plus in prop::bool::ANY) {
            let sign = if plus { Sign::Plus } else { Sign::Minus };
            let mut b = a.clone();
            b.div_binomial(exp, sign);
            b.mul_binomial(exp, sign);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn cumsum_matches_geometric_division(a in small_series()) {
            let geom = PowerSeries::from_i64s(&[1, -1]);
            let geom = PowerSeries::from_coeffs({
                let mut v = geom.coeffs().to_vec();
                v.resize(a.order() + 1, BigInt::zero());
                v
            });
            prop_assert_eq!(a.cumsum(), &a * &geom.inverse().unwrap());
        }
    }

    fn equalize(a: PowerSeries, b: PowerSeries) -> (PowerSeries, PowerSeries) {
        let n = a.order().max(b.order());
        let pad = |s: PowerSeries| {
            let mut v = s.coeffs().to_vec();
            v.resize(n + 1, BigInt::zero());
            PowerSeries::from_coeffs(v)
        };
        (pad(a), pad(b))
    }
}
