//! Bivariate series in `x` and `q`, truncated in both variables.
//!
//! The `x`-exponents live in a fixed window `x_min ..= x_max` with
//! `x_min <= 0 <= x_max`; each exponent carries a full [`PowerSeries`] in
//! `q`, all of one shared order.  Contributions that would leave the window
//! are discarded.  That is sound for constant-term extraction as long as
//! anything pushed past the boundary carries a `q`-order above the shared
//! truncation order, which [`BivariateSeries::window_for`] guarantees for
//! the products built in this crate: an entry at `x^(-r)` in them always
//! carries `q`-order at least `r(r-1)/2`.

use super::{PowerSeries, Sign};

/// Windowed Laurent polynomial in `x` whose coefficients are truncated
/// `q`-series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    x_min: i64,
    entries: Vec<PowerSeries>,
}

impl BivariateSeries {
    /// The default window for constant-term work at a given `q`-order: with
    /// `R = ceil(sqrt(2 * order))` it spans `-(R + 2) ..= R + 3`, so a
    /// discarded entry at `x^(-r)` has `q`-order
    /// `r(r-1)/2 >= (R+3)(R+2)/2 > order`.
    pub fn window_for(order: usize) -> (i64, i64) {
        let mut r = 0i64;
        while (r * r) < 2 * order as i64 {
            r += 1;
        }
        (-(r + 2), r + 3)
    }

    /// The constant `1` on an explicit window.
    ///
    /// # Panics
    /// Panics unless `x_min <= 0 <= x_max`.
    pub fn one(x_min: i64, x_max: i64, order: usize) -> Self {
        assert!(x_min <= 0 && 0 <= x_max, "window must contain x^0");
        let mut entries = vec![PowerSeries::zero(order); (x_max - x_min) as usize + 1];
        entries[(-x_min) as usize] = PowerSeries::one(order);
        BivariateSeries { x_min, entries }
    }

    /// The constant `1` on the default window for this order.
    pub fn one_default(order: usize) -> Self {
        let (lo, hi) = Self::window_for(order);
        Self::one(lo, hi, order)
    }

    pub fn x_min(&self) -> i64 {
        self.x_min
    }

    pub fn x_max(&self) -> i64 {
        self.x_min + self.entries.len() as i64 - 1
    }

    /// Shared `q`-truncation order of every entry.
    pub fn order(&self) -> usize {
        self.entries[0].order()
    }

    /// The `q`-series attached to `x^k`.
    ///
    /// # Panics
    /// Panics if `k` lies outside the window.
    pub fn entry(&self, k: i64) -> &PowerSeries {
        assert!(
            self.x_min <= k && k <= self.x_max(),
            "x-exponent {k} outside window [{}, {}]",
            self.x_min,
            self.x_max()
        );
        &self.entries[(k - self.x_min) as usize]
    }

    /// Mutable access to the `q`-series attached to `x^k`.
    pub fn entry_mut(&mut self, k: i64) -> &mut PowerSeries {
        assert!(
            self.x_min <= k && k <= self.x_max(),
            "x-exponent {k} outside window [{}, {}]",
            self.x_min,
            self.x_max()
        );
        let i = (k - self.x_min) as usize;
        &mut self.entries[i]
    }

    /// The coefficient of `x^0` as a `q`-series.
    pub fn constant_term_x(&self) -> &PowerSeries {
        self.entry(0)
    }

    /// In-place multiplication by the monomial `x^x_shift * q^q_shift`.
    /// Entries pushed past the window boundary are discarded.
    pub fn mul_monomial(&mut self, x_shift: i64, q_shift: usize) {
        let w = self.entries.len() as i64;
        let moved: Vec<PowerSeries> = (0..w)
            .map(|i| {
                let src = i - x_shift;
                if 0 <= src && src < w {
                    self.entries[src as usize].shifted(q_shift)
                } else {
                    PowerSeries::zero(self.order())
                }
            })
            .collect();
        self.entries = moved;
    }

    /// In-place multiplication by `1 + sign * x^x_shift * q^q_shift` with
    /// `x_shift` either `+1` or `-1`.
    ///
    /// # Panics
    /// Panics if `x_shift` is not `+1` or `-1`.
    pub fn mul_binomial(&mut self, x_shift: i64, q_shift: usize, sign: Sign) {
        assert!(x_shift == 1 || x_shift == -1, "x-shift must be +1 or -1");
        let w = self.entries.len();
        // Walk away from the incoming side so each source is still unmodified.
        let idx: Vec<usize> = if x_shift == 1 {
            (1..w).rev().collect()
        } else {
            (0..w - 1).collect()
        };
        for i in idx {
            let src = (i as i64 - x_shift) as usize;
            let (a, b) = split_two(&mut self.entries, i, src);
            match sign {
                Sign::Plus => a.add_shifted(b, q_shift),
                Sign::Minus => a.sub_shifted(b, q_shift),
            }
        }
    }

    /// In-place division by `1 + sign * x^x_shift * q^q_shift` with
    /// `x_shift` either `+1` or `-1`; the exact inverse of
    /// [`mul_binomial`](Self::mul_binomial) away from the window boundary.
    /// Contributions from outside the window enter as zero.
    pub fn div_binomial(&mut self, x_shift: i64, q_shift: usize, sign: Sign) {
        assert!(x_shift == 1 || x_shift == -1, "x-shift must be +1 or -1");
        let w = self.entries.len();
        // Walk from the incoming side so the recurrence reads finished
        // entries.
        let idx: Vec<usize> = if x_shift == 1 {
            (1..w).collect()
        } else {
            (0..w - 1).rev().collect()
        };
        for i in idx {
            let src = (i as i64 - x_shift) as usize;
            let (a, b) = split_two(&mut self.entries, i, src);
            match sign {
                Sign::Plus => a.sub_shifted(b, q_shift),
                Sign::Minus => a.add_shifted(b, q_shift),
            }
        }
    }

    /// Applies `1 + sign * q^exp` (no `x` part) to every entry.
    pub fn mul_univariate_binomial(&mut self, exp: usize, sign: Sign) {
        for e in &mut self.entries {
            e.mul_binomial(exp, sign);
        }
    }
}

/// Disjoint mutable borrows of entries `i` and `j`.
fn split_two(v: &mut [PowerSeries], i: usize, j: usize) -> (&mut PowerSeries, &PowerSeries) {
    assert_ne!(i, j);
    if i < j {
        let (lo, hi) = v.split_at_mut(j);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(i);
        (&mut hi[0], &lo[j])
    }
}
