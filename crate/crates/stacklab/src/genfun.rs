//! Generating functions for the enumeration families and a catalog of
//! named exact identities between them.
//!
//! Every series is produced from its defining sum or product, exactly, at a
//! requested truncation order.  The identity catalog pits those defining
//! sums against independent closed forms (eta-style products, false theta
//! combinations, Rogers-Ramanujan products, constant terms of bivariate
//! products), so a passing verification ties two genuinely different
//! computations together, coefficient by coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::series::{pochhammer, BivariateSeries, PowerSeries, Sign};
use crate::{Error, Result};

/// The series families: one tag per counting function, plus the partition
/// series `P` and the false theta function `L`.
///
/// `S`/`Ss` count stacks (with summits), `G`/`Gs` receding stacks, `H`/`Hs`
/// shifted stacks, `D` strict stacks, `Dm` semi-strict stacks, `FPhi` and
/// `F0` split partitions by whether their Frobenius symbol avoids a zero in
/// the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    S,
    Ss,
    G,
    Gs,
    H,
    Hs,
    D,
    Dm,
    FPhi,
    F0,
    P,
    L,
}

impl Variant {
    /// All variants, in table-column order.
    pub const ALL: [Variant; 12] = [
        Variant::S,
        Variant::Ss,
        Variant::G,
        Variant::Gs,
        Variant::H,
        Variant::Hs,
        Variant::D,
        Variant::Dm,
        Variant::FPhi,
        Variant::F0,
        Variant::P,
        Variant::L,
    ];

    /// The variants whose coefficients count something (excludes `L`).
    pub const COUNTING: [Variant; 11] = [
        Variant::S,
        Variant::Ss,
        Variant::G,
        Variant::Gs,
        Variant::H,
        Variant::Hs,
        Variant::D,
        Variant::Dm,
        Variant::FPhi,
        Variant::F0,
        Variant::P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::S => "s",
            Variant::Ss => "ss",
            Variant::G => "g",
            Variant::Gs => "gs",
            Variant::H => "h",
            Variant::Hs => "hs",
            Variant::D => "d",
            Variant::Dm => "dm",
            Variant::FPhi => "fphi",
            Variant::F0 => "f0",
            Variant::P => "p",
            Variant::L => "l",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == lower)
            .ok_or_else(|| Error::Domain(format!("unknown series variant {s:?}")))
    }
}

/// The exact truncated series of a variant at the given order, computed
/// from its defining sum (or product, for `P`).
pub fn series(v: Variant, order: usize) -> PowerSeries {
    match v {
        Variant::S => sum_no_summit(order, |m| m),
        Variant::Ss => sum_with_summit(order, |m| m),
        Variant::G => sum_no_summit(order, |m| m * m),
        Variant::Gs => sum_with_summit(order, |m| m * m),
        Variant::H => sum_no_summit(order, |m| m * (m + 1) / 2),
        Variant::Hs => sum_with_summit(order, |m| m * (m + 1) / 2),
        Variant::D => strict_sum(order),
        Variant::Dm => semistrict_sum(order),
        Variant::FPhi => sum_with_summit(order, |m| m * m + m),
        Variant::F0 => &series(Variant::Gs, order) - &series(Variant::FPhi, order),
        Variant::P => partition_series(order),
        Variant::L => false_theta(order),
    }
}

/// The exact coefficient of `q^n` in the variant's series.
pub fn count(v: Variant, n: usize) -> BigInt {
    series(v, n).coeff(n).clone()
}

/// `1 + sum_{m>=1} q^lead(m) / ((q)_{m-1}^2 (1 - q^m))`, the shape shared
/// by the summit-free families.  The running `1/(q)_{m-1}^2` is updated by
/// two binomial divisions per step, so the whole sum costs
/// O(order * terms) coefficient operations.
fn sum_no_summit(order: usize, lead: impl Fn(usize) -> usize) -> PowerSeries {
    let mut acc = PowerSeries::one(order);
    let mut inv = PowerSeries::one(order);
    for m in 1.. {
        if lead(m) > order {
            break;
        }
        if m >= 2 {
            inv.div_binomial(m - 1, Sign::Minus);
            inv.div_binomial(m - 1, Sign::Minus);
        }
        let mut term = inv.shifted(lead(m));
        term.div_binomial(m, Sign::Minus);
        acc = &acc + &term;
    }
    acc
}

/// `sum_{m>=0} q^lead(m) / (q)_m^2`, the shape shared by the
/// summit-counting families.
fn sum_with_summit(order: usize, lead: impl Fn(usize) -> usize) -> PowerSeries {
    let mut acc = PowerSeries::zero(order);
    let mut inv = PowerSeries::one(order);
    for m in 0.. {
        if lead(m) > order {
            break;
        }
        if m >= 1 {
            inv.div_binomial(m, Sign::Minus);
            inv.div_binomial(m, Sign::Minus);
        }
        acc.add_shifted(&inv, lead(m));
    }
    acc
}

/// `sum_{m>=0} q^(m+1) (-q)_m^2` for strict stacks.
fn strict_sum(order: usize) -> PowerSeries {
    let mut acc = PowerSeries::zero(order);
    let mut prod = PowerSeries::one(order);
    for m in 0.. {
        if m + 1 > order {
            break;
        }
        if m >= 1 {
            prod.mul_binomial(m, Sign::Plus);
            prod.mul_binomial(m, Sign::Plus);
        }
        acc.add_shifted(&prod, m + 1);
    }
    acc
}

/// `sum_{m>=0} q^(m+1) (-q)_m / (q)_m` for semi-strict stacks.
fn semistrict_sum(order: usize) -> PowerSeries {
    let mut acc = PowerSeries::zero(order);
    let mut ratio = PowerSeries::one(order);
    for m in 0.. {
        if m + 1 > order {
            break;
        }
        if m >= 1 {
            ratio.mul_binomial(m, Sign::Plus);
            ratio.div_binomial(m, Sign::Minus);
        }
        acc.add_shifted(&ratio, m + 1);
    }
    acc
}

/// `1/(q)_inf`, the partition series.
fn partition_series(order: usize) -> PowerSeries {
    pochhammer(Sign::Minus, 1, None, 1, order)
        .expect("positive offset")
        .inverse()
        .expect("unit constant")
}

/// The false theta function `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2)`.
fn false_theta(order: usize) -> PowerSeries {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    for n in 1usize.. {
        let e = n * (n + 1) / 2;
        if e > order {
            break;
        }
        coeffs[e] = BigInt::from(if n % 2 == 1 { 1 } else { -1 });
    }
    PowerSeries::from_coeffs(coeffs)
}

/// `sum_{n>=0} q^lead(n) / (q)_n`, the Rogers-Ramanujan sum shape.
fn rr_sum(order: usize, lead: impl Fn(usize) -> usize) -> PowerSeries {
    let mut acc = PowerSeries::zero(order);
    let mut inv = PowerSeries::one(order);
    for n in 0.. {
        if lead(n) > order {
            break;
        }
        if n >= 1 {
            inv.div_binomial(n, Sign::Minus);
        }
        acc.add_shifted(&inv, lead(n));
    }
    acc
}

/// `sum_{m>=0} q^lead(m) / (q^2;q^2)_m`, the even-denominator sum shape.
fn even_sum(order: usize, lead: impl Fn(usize) -> usize) -> PowerSeries {
    let mut acc = PowerSeries::zero(order);
    let mut inv = PowerSeries::one(order);
    for m in 0.. {
        if lead(m) > order {
            break;
        }
        if m >= 1 {
            inv.div_binomial(2 * m, Sign::Minus);
        }
        acc.add_shifted(&inv, lead(m));
    }
    acc
}

/// Named two-sided identities between a defining sum and an independent
/// closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityTag {
    /// `Ss = (1 - L) / (q)_inf^2`.
    SsStanley,
    /// `S = 1 + L / (q)_inf^2`; the false-theta product enumerates the
    /// nonempty stacks, so the empty one is restored explicitly.
    SAuluck,
    /// `Dm = q (q^2;q^2)_inf / ((1+q) (q)_inf^2)`.
    DmEta,
    /// `Gs = 1/(q)_inf`: receding stacks with summits are partitions.
    GsEqP,
    /// `Gs = FPhi + G - 1`, both sides from their defining sums; the empty
    /// sequence is counted by both right-hand series, hence the unit.
    GPlusFPhi,
    /// `p(n) = FPhi(n) + G(n) - [n = 0]`, entering through the partition
    /// product.
    GsSum,
    /// `F0 = G - 1` coefficientwise: the constant term of `G` counts the
    /// empty stack, which the zero-row split assigns to the other class.
    F0EqG,
    /// `H = 1 + (q)_inf^{-1} sum_m q^((2m+1)(m+1)) / (q^2;q^2)_m`.
    HsEulerian,
    /// `Hs = (q)_inf^{-1} sum_n q^(n(2n+1)) / (q^2;q^2)_n`.
    HsWatson,
    /// First Rogers-Ramanujan identity.
    Rr0,
    /// Second Rogers-Ramanujan identity.
    Rr1,
    /// Jacobi triple product at the window's `x`-powers.
    JtpSpecial,
    /// `H - 1` as the `x`-constant term of `qx (-1/x;q)_inf / (xq;q)_inf`.
    ConstTermH,
    /// `Hs` as the `x`-constant term of `(-1/x;q)_inf / (xq;q)_inf`.
    ConstTermHs,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 14] = [
        IdentityTag::SsStanley,
        IdentityTag::SAuluck,
        IdentityTag::DmEta,
        IdentityTag::GsEqP,
        IdentityTag::GPlusFPhi,
        IdentityTag::GsSum,
        IdentityTag::F0EqG,
        IdentityTag::HsEulerian,
        IdentityTag::HsWatson,
        IdentityTag::Rr0,
        IdentityTag::Rr1,
        IdentityTag::JtpSpecial,
        IdentityTag::ConstTermH,
        IdentityTag::ConstTermHs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::SsStanley => "ss_stanley",
            IdentityTag::SAuluck => "s_auluck",
            IdentityTag::DmEta => "dm_eta",
            IdentityTag::GsEqP => "gs_eq_p",
            IdentityTag::GPlusFPhi => "g_plus_fphi",
            IdentityTag::GsSum => "gs_sum",
            IdentityTag::F0EqG => "f0_eq_g",
            IdentityTag::HsEulerian => "hs_eulerian",
            IdentityTag::HsWatson => "hs_watson",
            IdentityTag::Rr0 => "rr0",
            IdentityTag::Rr1 => "rr1",
            IdentityTag::JtpSpecial => "jtp_special",
            IdentityTag::ConstTermH => "const_term_h",
            IdentityTag::ConstTermHs => "const_term_hs",
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        IdentityTag::ALL
            .into_iter()
            .find(|t| t.name() == lower)
            .ok_or_else(|| Error::Domain(format!("unknown identity tag {s:?}")))
    }
}

/// Which side of an identity to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of checking one identity at one order.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub tag: IdentityTag,
    pub order: usize,
    pub pass: bool,
    /// The earliest disagreement, when there is one.
    pub mismatch: Option<Mismatch>,
}

/// First coefficient where the two sides differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    /// Set for the bivariate identity, whose entries carry an `x`-power.
    pub x_exponent: Option<i64>,
    pub q_exponent: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            return write!(f, "{}: pass at order {}", self.tag, self.order);
        }
        let m = self.mismatch.as_ref().expect("failing report carries a mismatch");
        write!(f, "{}: FAIL at order {}, first mismatch at ", self.tag, self.order)?;
        if let Some(x) = m.x_exponent {
            write!(f, "x^{x} ")?;
        }
        write!(f, "q^{}: left {} vs right {}", m.q_exponent, m.left, m.right)
    }
}

/// `(q^offset; q^step)_inf` as a series.
fn poch_inf(offset: usize, step: usize, order: usize) -> PowerSeries {
    pochhammer(Sign::Minus, offset, None, step, order).expect("positive offset")
}

/// `(-1/x; q)_inf / (xq; q)_inf` on the default window.
fn summit_kernel(order: usize) -> BivariateSeries {
    let mut b = BivariateSeries::one_default(order);
    for j in 0..=order {
        b.mul_binomial(-1, j, Sign::Plus);
    }
    for j in 1..=order {
        b.div_binomial(1, j, Sign::Minus);
    }
    b
}

/// Builds one side of an identity as an exact series at the given order.
///
/// For the bivariate triple-product identity the univariate projection to
/// the `x`-constant term is returned; [`verify_identity`] checks the whole
/// window for that tag.
pub fn closed_form(tag: IdentityTag, side: Side, order: usize) -> PowerSeries {
    use IdentityTag::*;
    let p = || partition_series(order);
    match (tag, side) {
        (SsStanley, Side::Left) => series(Variant::Ss, order),
        (SsStanley, Side::Right) => {
            let psq = &p() * &p();
            &(&PowerSeries::one(order) - &false_theta(order)) * &psq
        }
        (SAuluck, Side::Left) => series(Variant::S, order),
        (SAuluck, Side::Right) => {
            let psq = &p() * &p();
            &PowerSeries::one(order) + &(&false_theta(order) * &psq)
        }
        (DmEta, Side::Left) => series(Variant::Dm, order),
        (DmEta, Side::Right) => {
            let mut r = &poch_inf(2, 2, order) * &(&p() * &p());
            r.div_binomial(1, Sign::Plus);
            r.shifted(1)
        }
        (GsEqP, Side::Left) => series(Variant::Gs, order),
        (GsEqP, Side::Right) => p(),
        (GPlusFPhi, Side::Left) => series(Variant::Gs, order),
        (GPlusFPhi, Side::Right) => {
            &(&series(Variant::FPhi, order) + &series(Variant::G, order))
                - &PowerSeries::one(order)
        }
        (GsSum, Side::Left) => p(),
        (GsSum, Side::Right) => {
            &(&series(Variant::FPhi, order) + &series(Variant::G, order))
                - &PowerSeries::one(order)
        }
        (F0EqG, Side::Left) => series(Variant::F0, order),
        (F0EqG, Side::Right) => &series(Variant::G, order) - &PowerSeries::one(order),
        (HsEulerian, Side::Left) => series(Variant::H, order),
        (HsEulerian, Side::Right) => {
            let inner = even_sum(order, |m| (2 * m + 1) * (m + 1));
            &PowerSeries::one(order) + &(&p() * &inner)
        }
        (HsWatson, Side::Left) => series(Variant::Hs, order),
        (HsWatson, Side::Right) => {
            let inner = even_sum(order, |n| n * (2 * n + 1));
            &p() * &inner
        }
        (Rr0, Side::Left) => rr_sum(order, |n| n * n),
        (Rr0, Side::Right) => {
            let a = poch_inf(1, 5, order).inverse().expect("unit constant");
            let b = poch_inf(4, 5, order).inverse().expect("unit constant");
            &a * &b
        }
        (Rr1, Side::Left) => rr_sum(order, |n| n * n + n),
        (Rr1, Side::Right) => {
            let a = poch_inf(2, 5, order).inverse().expect("unit constant");
            let b = poch_inf(3, 5, order).inverse().expect("unit constant");
            &a * &b
        }
        (JtpSpecial, Side::Left) => jtp_product(order).constant_term_x().clone(),
        (JtpSpecial, Side::Right) => jtp_theta(order).constant_term_x().clone(),
        (ConstTermH, Side::Left) => series(Variant::H, order),
        (ConstTermH, Side::Right) => {
            let mut b = summit_kernel(order);
            b.mul_monomial(1, 1);
            &PowerSeries::one(order) + b.constant_term_x()
        }
        (ConstTermHs, Side::Left) => series(Variant::Hs, order),
        (ConstTermHs, Side::Right) => summit_kernel(order).constant_term_x().clone(),
    }
}

/// `(-1/x;q)_inf (-xq;q)_inf (q;q)_inf` on the default window.
fn jtp_product(order: usize) -> BivariateSeries {
    let mut b = BivariateSeries::one_default(order);
    for j in 0..=order {
        b.mul_binomial(-1, j, Sign::Plus);
    }
    for j in 1..=order {
        b.mul_binomial(1, j, Sign::Plus);
    }
    for j in 1..=order {
        b.mul_univariate_binomial(j, Sign::Minus);
    }
    b
}

/// `sum_n x^n q^(n(n+1)/2)` over the default window.
fn jtp_theta(order: usize) -> BivariateSeries {
    let mut b = BivariateSeries::one_default(order);
    for k in b.x_min()..=b.x_max() {
        let e = if k >= 0 {
            k as usize * (k as usize + 1) / 2
        } else {
            let r = (-k) as usize;
            r * (r - 1) / 2
        };
        *b.entry_mut(k) = PowerSeries::monomial(1, e, order);
    }
    b
}

/// Checks one identity at one order, reporting the earliest mismatch on
/// failure.  The bivariate triple product is compared entry by entry across
/// the whole window; every other tag compares the two univariate sides.
pub fn verify_identity(tag: IdentityTag, order: usize) -> VerificationReport {
    if tag == IdentityTag::JtpSpecial {
        let left = jtp_product(order);
        let right = jtp_theta(order);
        for k in left.x_min()..=left.x_max() {
            if let Some(m) = first_mismatch(left.entry(k), right.entry(k)) {
                return VerificationReport {
                    tag,
                    order,
                    pass: false,
                    mismatch: Some(Mismatch {
                        x_exponent: Some(k),
                        ..m
                    }),
                };
            }
        }
        return VerificationReport {
            tag,
            order,
            pass: true,
            mismatch: None,
        };
    }
    let left = closed_form(tag, Side::Left, order);
    let right = closed_form(tag, Side::Right, order);
    let mismatch = first_mismatch(&left, &right);
    VerificationReport {
        tag,
        order,
        pass: mismatch.is_none(),
        mismatch,
    }
}

fn first_mismatch(left: &PowerSeries, right: &PowerSeries) -> Option<Mismatch> {
    (0..=left.order()).find_map(|n| {
        (left.coeff(n) != right.coeff(n)).then(|| Mismatch {
            x_exponent: None,
            q_exponent: n,
            left: left.coeff(n).clone(),
            right: right.coeff(n).clone(),
        })
    })
}
