//! Exact generating-function algebra for free products.
//!
//! Each factor carries `M_i(z) = Σ_{n≥1} σ_n^{(i)} z^n`, a polynomial for a
//! finite factor or a rational function `P_i/Q_i` for an infinite one. The
//! product's series `M(z) = Σ σ_n z^n` satisfies
//!
//! ```text
//! M = 1 / (1 − Σ_i M_i/(1+M_i))
//! ```
//!
//! Writing `B_i = Q_i + P_i` (so `1 + M_i = B_i/Q_i`) and clearing all
//! denominators gives `M = Ñ/D̃` with
//!
//! ```text
//! Ñ = Π_i B_i,        D̃ = Π_i B_i − Σ_i P_i · Π_{j≠i} B_j,
//! ```
//!
//! both integer polynomials with `D̃(0) = 1`. The least positive zero of
//! `D̃` is `1/μ`; everything downstream (root isolation, amplitude) works on
//! these cleared forms. This module builds them and expands `M` and the
//! marked series `M_i^* = M·M_i/(1+M_i)` as exact truncated series, which is
//! what the brute-force oracle is compared against.

use crate::enumerate::SawCounts;
use crate::interval::RatInterval;
use crate::roots::{self, RootError};
use crate::{Int, IntPoly, Rat, RatSeries};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Truncation order used by the identity checks and available as a default
/// for series expansion; far beyond anything the validation suite needs.
pub const DEFAULT_SERIES_ORDER: usize = 64;

/// Depth to which rational-factor series coefficients are checked for
/// nonnegativity.
pub const DEFAULT_CHECK_DEPTH: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenFunError {
    #[error("a free product needs at least 2 factors, got {0}")]
    TooFewFactors(usize),
    #[error("factor {index} has an identically zero generating function")]
    ZeroFactor { index: usize },
    #[error("denominator vanishes at z = 0")]
    DenominatorVanishesAtOrigin,
    #[error("generating function has a nonzero constant term")]
    ConstantTerm,
    #[error("series coefficient of z^{index} is negative: {value}")]
    NegativeCoefficient { index: usize, value: Rat },
    #[error("cannot normalize to an integer P/Q with Q(0) = 1")]
    NotNormalizable,
    #[error("factor index {index} out of range for {count} factors")]
    FactorIndexOutOfRange { index: usize, count: usize },
}

/// The SAW generating function of one factor, as a normalized rational
/// function `M_i = P/Q` with integer coefficients, `P(0) = 0`, `Q(0) = 1`
/// (`Q = 1` exactly for finite factors), plus a certified lower bound on
/// `Q`'s least positive root — i.e. on the radius of convergence of `M_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorGenFun {
    numerator: IntPoly,
    denominator: IntPoly,
    pole_radius_lower_bound: Option<Rat>,
}

impl FactorGenFun {
    /// `P`: the numerator polynomial; equals `M_i` itself for finite factors.
    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    /// `Q`: the denominator polynomial, constant 1 for finite factors.
    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Certified lower bound on the least positive zero of `Q`; `None`
    /// means `Q` has no positive zero (radius of convergence +∞).
    pub fn pole_radius_lower_bound(&self) -> Option<&Rat> {
        self.pole_radius_lower_bound.as_ref()
    }

    /// `B = Q + P`, the cleared form of `1 + M_i`.
    pub fn b_polynomial(&self) -> IntPoly {
        &self.denominator + &self.numerator
    }

    /// Whether `M_i` is a polynomial (finite factor).
    pub fn is_polynomial(&self) -> bool {
        self.denominator.degree() == Some(0)
    }

    /// Exact series expansion of `P/Q` through `order`.
    pub fn series(&self, order: usize) -> RatSeries {
        let p = RatSeries::from_poly(&self.numerator.to_rational(), order);
        let q = RatSeries::from_poly(&self.denominator.to_rational(), order);
        p.div(&q).expect("Q(0) = 1 by construction")
    }

    /// Interval enclosure of `M_i(x)`; `None` when the enclosure of `Q(x)`
    /// straddles zero.
    pub fn eval_interval(&self, x: &RatInterval) -> Option<RatInterval> {
        let p = x.eval_poly(&self.numerator.to_rational());
        let q = x.eval_poly(&self.denominator.to_rational());
        p.div(&q)
    }

    /// Exact value of `M_i(x)`; `None` when `Q(x) = 0`.
    pub fn eval_exact(&self, x: &Rat) -> Option<Rat> {
        let q = self.denominator.eval_rat(x);
        if q.is_zero() {
            return None;
        }
        Some(self.numerator.eval_rat(x) / q)
    }
}

/// Builds a (polynomial) factor generating function from exact SAW counts:
/// coefficient `n` is `counts[n]` for `n ≥ 1`, the constant count dropped.
pub fn genfun_from_counts(counts: &SawCounts) -> FactorGenFun {
    let mut coeffs = vec![Int::zero()];
    for n in 1..counts.len() {
        coeffs.push(Int::from(counts.get(n)));
    }
    FactorGenFun {
        numerator: IntPoly::from_coeffs(coeffs),
        denominator: IntPoly::one(),
        pole_radius_lower_bound: None,
    }
}

/// Builds a factor generating function from a user-supplied rational form,
/// with [`DEFAULT_CHECK_DEPTH`] as the nonnegativity check depth.
pub fn genfun_from_rational(num: &IntPoly, den: &IntPoly) -> Result<FactorGenFun, GenFunError> {
    genfun_from_rational_with_depth(num, den, DEFAULT_CHECK_DEPTH)
}

/// Builds a factor generating function from a rational form `num/den`.
///
/// Normalization: the pair is reduced by its joint integer content, then
/// fully reduced over ℚ[z] (dropping any common polynomial factor — this
/// keeps removable singularities out of the cleared forms, where they
/// would masquerade as shared roots of `D̃` and `B_i`), then rescaled so
/// `Q(0) = 1`. By Fatou's lemma a power series with integer coefficients
/// has a reduced representation with integer coefficients and `Q(0) = 1`,
/// so failure to land there means the input is not such a series and is
/// rejected.
///
/// With `Q(0) = 1` the division recurrence has integer steps, so series
/// integrality is automatic; nonnegativity is checked through
/// `check_depth` coefficients. That finite check is a guard, not a proof,
/// that the input counts anything — provenance of user-supplied generating
/// functions cannot be verified here.
pub fn genfun_from_rational_with_depth(
    num: &IntPoly,
    den: &IntPoly,
    check_depth: usize,
) -> Result<FactorGenFun, GenFunError> {
    if den.coeff(0).is_zero() {
        return Err(GenFunError::DenominatorVanishesAtOrigin);
    }
    let (p, q) = reduce_joint_content(num, den);
    let (p, q) = reduce_fully(&p, &q).ok_or(GenFunError::NotNormalizable)?;
    if !p.coeff(0).is_zero() {
        return Err(GenFunError::ConstantTerm);
    }

    let probe = FactorGenFun {
        numerator: p,
        denominator: q,
        pole_radius_lower_bound: None,
    };
    let series = probe.series(check_depth);
    for n in 0..=check_depth {
        let c = series.coeff(n);
        if c.is_negative() {
            return Err(GenFunError::NegativeCoefficient { index: n, value: c.clone() });
        }
        debug_assert!(c.is_integer(), "Q(0)=1 makes the recurrence integral");
    }

    let bound = pole_radius_lower_bound(&probe.denominator);
    Ok(FactorGenFun { pole_radius_lower_bound: bound, ..probe })
}

/// Divides both polynomials by the gcd of all their coefficients.
fn reduce_joint_content(num: &IntPoly, den: &IntPoly) -> (IntPoly, IntPoly) {
    use num_integer::Integer;
    let g = num.content().gcd(&den.content());
    if g.is_zero() || g.is_one() {
        return (num.clone(), den.clone());
    }
    let div = |p: &IntPoly| p.map(|c| c / &g);
    (div(num), div(den))
}

/// Full gcd reduction over ℚ[z] followed by the `Q(0) = 1` rescale; `None`
/// when the result has non-integer coefficients.
fn reduce_fully(num: &IntPoly, den: &IntPoly) -> Option<(IntPoly, IntPoly)> {
    let nr = num.to_rational();
    let dr = den.to_rational();
    let g = nr.gcd(&dr);
    let (nq, nrem) = nr.div_rem(&g);
    let (dq, drem) = dr.div_rem(&g);
    debug_assert!(nrem.is_zero() && drem.is_zero());
    let d0 = dq.coeff(0);
    if d0.is_zero() {
        return None; // cannot happen: den(0) ≠ 0 and g(0) divides it
    }
    let scale = d0.recip();
    let nq = nq.scale(&scale);
    let dq = dq.scale(&scale);
    if nq.coeffs().iter().chain(dq.coeffs()).any(|c| !c.is_integer()) {
        return None;
    }
    let to_int = |p: &crate::RatPoly| p.map(|c| c.numer().clone());
    Some((to_int(&nq), to_int(&dq)))
}

/// Certified lower bound on the least positive zero of `q` (`None` if it
/// has no positive zero). For an exactly rational least zero the bound is
/// the zero itself.
fn pole_radius_lower_bound(q: &IntPoly) -> Option<Rat> {
    if q.degree() == Some(0) {
        return None;
    }
    let tol = Rat::new(Int::one(), Int::from(1_000_000_000_000u64));
    match roots::smallest_positive_root(&q.to_rational(), &tol) {
        Ok(interval) => Some(interval.lo().clone()),
        Err(RootError::NoPositiveRoot) => None,
        // Q(0) = 1 > 0 and the remaining error conditions need a zero or
        // sign-degenerate polynomial, which normalization has excluded.
        Err(e) => unreachable!("pole bound isolation cannot fail here: {e}"),
    }
}

fn check_factors(factors: &[FactorGenFun]) -> Result<(), GenFunError> {
    if factors.len() < 2 {
        return Err(GenFunError::TooFewFactors(factors.len()));
    }
    for (index, f) in factors.iter().enumerate() {
        if f.numerator.is_zero() {
            return Err(GenFunError::ZeroFactor { index });
        }
    }
    Ok(())
}

/// Cleared numerator of `N(z) = Π_i (1 + M_i)`: returns `(Π B_i, Π Q_i)`
/// so that `N = Ñ/ΠQ` exactly.
pub fn build_n(factors: &[FactorGenFun]) -> Result<(IntPoly, IntPoly), GenFunError> {
    check_factors(factors)?;
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for f in factors {
        num = &num * &f.b_polynomial();
        den = &den * f.denominator();
    }
    Ok((num, den))
}

/// The cleared denominator polynomial
/// `D̃ = Π_i B_i − Σ_i P_i · Π_{j≠i} B_j`, normalized by construction so
/// that `D̃(0) = 1`. Its least positive zero is `z_* = 1/μ`.
pub fn build_d(factors: &[FactorGenFun]) -> Result<IntPoly, GenFunError> {
    check_factors(factors)?;
    let b: Vec<IntPoly> = factors.iter().map(FactorGenFun::b_polynomial).collect();
    let mut d = b.iter().fold(IntPoly::one(), |acc, bi| &acc * bi);
    for (i, f) in factors.iter().enumerate() {
        let mut term = f.numerator().clone();
        for (j, bj) in b.iter().enumerate() {
            if j != i {
                term = &term * bj;
            }
        }
        d = &d - &term;
    }
    debug_assert!(d.coeff(0).is_one(), "B_i(0) = 1 and P_i(0) = 0 force D̃(0) = 1");
    Ok(d)
}

/// Exact truncated expansion of the product's SAW series
/// `M = 1 / (1 − Σ_i P_i/B_i)` through `order`.
pub fn expand_m(factors: &[FactorGenFun], order: usize) -> Result<RatSeries, GenFunError> {
    check_factors(factors)?;
    let mut s = RatSeries::zero(order);
    for f in factors {
        s = s.add(&fraction_series(f, order));
    }
    let denom = RatSeries::one(order).sub(&s);
    Ok(RatSeries::one(order)
        .div(&denom)
        .expect("denominator has constant term 1"))
}

/// Exact truncated expansion of the marked series `M_i^*` counting product
/// walks that visit a non-root vertex of the first copy of factor `i`
/// (0-based index): `M_i^* = M · M_i/(1+M_i)`.
pub fn expand_m_star(
    factors: &[FactorGenFun],
    i: usize,
    order: usize,
) -> Result<RatSeries, GenFunError> {
    if i >= factors.len() {
        return Err(GenFunError::FactorIndexOutOfRange { index: i, count: factors.len() });
    }
    let m = expand_m(factors, order)?;
    Ok(m.mul(&fraction_series(&factors[i], order)))
}

/// Series of `M_i/(1+M_i) = P_i/B_i` (valid since `B_i(0) = 1`).
fn fraction_series(f: &FactorGenFun, order: usize) -> RatSeries {
    let p = RatSeries::from_poly(&f.numerator().to_rational(), order);
    let b = RatSeries::from_poly(&f.b_polynomial().to_rational(), order);
    p.div(&b).expect("B(0) = 1")
}
