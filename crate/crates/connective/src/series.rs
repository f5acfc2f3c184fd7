//! Truncated power series with exact coefficient arithmetic.
//!
//! A [`TruncatedSeries`] holds the coefficients `c_0 … c_N` of a power
//! series modulo `z^{N+1}`. All operations are exact through the truncation
//! order; combining series of different orders truncates to the shorter one,
//! since coefficients beyond it would not be determined by the inputs.

use crate::poly::{FieldScalar, Polynomial};

/// Power series truncated after order `N` (so `N + 1` stored coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: FieldScalar> TruncatedSeries<T> {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![T::zero(); order + 1] }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Builds a series from exactly `order + 1` coefficients.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least order 0");
        TruncatedSeries { coeffs }
    }

    /// Truncation of a polynomial (higher-degree terms discarded).
    pub fn from_poly(p: &Polynomial<T>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(p.coeff(k));
        }
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Re-truncates to a (smaller or equal) order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product truncated to the shorter order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                coeffs[i + j] = coeffs[i + j].clone()
                    + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Quotient series `self / rhs`; `None` when `rhs` has zero constant
    /// term (the quotient is then not a power series).
    ///
    /// Uses the division recurrence `c_n = (a_n − Σ_{k≥1} b_k c_{n−k}) / b_0`
    /// directly instead of a separate reciprocal-then-multiply pass.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.coeffs[0].is_zero() {
            return None;
        }
        let n = self.order().min(rhs.order());
        let b0 = rhs.coeffs[0].clone();
        let mut coeffs: Vec<T> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - rhs.coeffs[j].clone() * coeffs[k - j].clone();
            }
            coeffs.push(acc / b0.clone());
        }
        Some(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; `None` when the constant term is zero.
    pub fn reciprocal(&self) -> Option<Self> {
        Self::one(self.order()).div(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::{Int, Rat, RatSeries};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rs(coeffs: &[i64]) -> RatSeries {
        TruncatedSeries::from_coeffs(
            coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect(),
        )
    }

    #[test]
    fn geometric_series_reciprocal() {
        // 1/(1-z) = 1 + z + z^2 + …
        let one_minus_z = rs(&[1, -1, 0, 0, 0, 0]);
        let inv = one_minus_z.reciprocal().unwrap();
        assert_eq!(inv, rs(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn division_by_unit_constant_is_identity() {
        let s = rs(&[3, 1, 4, 1, 5]);
        assert_eq!(s.div(&rs(&[1, 0, 0, 0, 0])).unwrap(), s);
    }

    #[test]
    fn zero_constant_term_has_no_reciprocal() {
        assert!(rs(&[0, 1, 0]).reciprocal().is_none());
        assert!(rs(&[1, 2]).div(&rs(&[0, 1])).is_none());
    }

    #[test]
    fn mixed_orders_truncate_to_shorter() {
        let a = rs(&[1, 2, 3, 4, 5]);
        let b = rs(&[1, 1]);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b), rs(&[1, 3]));
    }

    #[test]
    fn from_poly_truncates_and_pads() {
        let p = Polynomial::from_coeffs(vec![Rat::from_integer(Int::from(7))]);
        let s = RatSeries::from_poly(&p, 3);
        assert_eq!(s, rs(&[7, 0, 0, 0]));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = RatSeries> {
        prop::collection::vec(-9i64..=9, order + 1..=order + 1).prop_map(|v| rs(&v))
    }

    proptest! {
        #[test]
        fn div_then_mul_roundtrips(a in arb_series(8), b in arb_series(8)) {
            prop_assume!(!b.coeff(0).is_zero());
            let q = a.div(&b).unwrap();
            prop_assert_eq!(q.mul(&b), a);
        }

        #[test]
        fn reciprocal_multiplies_to_one(b in arb_series(8)) {
            prop_assume!(!b.coeff(0).is_zero());
            let inv = b.reciprocal().unwrap();
            prop_assert_eq!(b.mul(&inv), RatSeries::one(8));
        }

        #[test]
        fn mul_agrees_with_polynomial_product(a in prop::collection::vec(-5i64..=5, 1..=5),
                                              b in prop::collection::vec(-5i64..=5, 1..=5)) {
            let pa = Polynomial::from_coeffs(a.iter().map(|&c| Rat::from_integer(Int::from(c))).collect::<Vec<_>>());
            let pb = Polynomial::from_coeffs(b.iter().map(|&c| Rat::from_integer(Int::from(c))).collect::<Vec<_>>());
            let order = 10;
            let sa = RatSeries::from_poly(&pa, order);
            let sb = RatSeries::from_poly(&pb, order);
            let prod_poly = &pa * &pb;
            prop_assert_eq!(sa.mul(&sb), RatSeries::from_poly(&prod_poly, order));
        }
    }
}
