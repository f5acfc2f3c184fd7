//! Exact interval arithmetic over the rationals.
//!
//! Used for the certification side conditions: every pass/fail decision on
//! an isolated root is made by evaluating polynomials and rational functions
//! over an interval with exact rational endpoints, so rounding can never
//! flip a verdict. Division by an interval containing zero is reported as
//! `None` rather than widened to infinity.

use crate::{Rat, RatPoly};
use num_traits::{Signed, Zero};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    /// Degenerate interval containing exactly `x`.
    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Every point of the interval is `> 0`.
    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Every point of the interval is `< 0`.
    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RatInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }

    pub fn neg(&self) -> Self {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    /// Reciprocal interval; `None` if zero is inside (or on the boundary).
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    /// Quotient `self / rhs`; `None` if `rhs` contains zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.recip()?))
    }

    /// Interval Horner evaluation: an enclosure of `{p(x) : x ∈ self}`.
    pub fn eval_poly(&self, p: &RatPoly) -> Self {
        let mut acc = RatInterval::point(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&RatInterval::point(c.clone()));
        }
        acc
    }

    /// Endpoints as `f64` (reporting only).
    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.lo.to_f64().unwrap_or(f64::NEG_INFINITY),
            self.hi.to_f64().unwrap_or(f64::INFINITY),
        )
    }
}
