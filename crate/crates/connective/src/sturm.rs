//! Sturm chains for exact real-root counting of integer polynomials.
//!
//! The chain is built from the square-free part of the input, with each
//! remainder normalized to a primitive integer polynomial (positive scaling
//! never changes sign variations, and keeping coefficients primitive stops
//! them from exploding during the Euclidean cascade). Root counts over a
//! half-open interval `(a, b]` come from the classical variation difference
//! `V(a) − V(b)`, which is what the bisection in root isolation consumes:
//! half-open counts split exactly when an interval is cut at a point.

use crate::{IntPoly, Rat, RatPoly};
use num_traits::{Signed, Zero};

/// Sturm chain of (the square-free part of) a rational polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain `p₀ = squarefree(p), p₁ = p₀′, pₖ₊₁ = −rem(pₖ₋₁, pₖ)`,
    /// each element reduced to a primitive integer polynomial.
    ///
    /// Panics on the zero polynomial, which has no meaningful chain.
    pub fn new(p: &RatPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = primitive(&p.square_free_part());
        if p0.degree() == Some(0) {
            return Self { chain: vec![p0] };
        }
        let p1 = primitive(&p0.to_rational().derivative());
        let mut chain = vec![p0, p1];
        loop {
            let a = chain[chain.len() - 2].to_rational();
            let b = chain[chain.len() - 1].to_rational();
            let (_, rem) = a.div_rem(&b);
            if rem.is_zero() {
                break;
            }
            chain.push(positive_primitive(&-&rem));
        }
        Self { chain }
    }

    /// The chain elements, for inspection in tests.
    pub fn elements(&self) -> &[IntPoly] {
        &self.chain
    }

    /// Number of sign variations in the chain evaluated at `x`; zero values
    /// are dropped before counting, per the classical convention.
    pub fn sign_variations_at(&self, x: &Rat) -> usize {
        let mut variations = 0;
        let mut last: Option<bool> = None; // sign of previous nonzero value
        for p in &self.chain {
            let v = p.eval_rat(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if let Some(prev) = last {
                if prev != positive {
                    variations += 1;
                }
            }
            last = Some(positive);
        }
        variations
    }

    /// Number of distinct real roots of the original polynomial in the
    /// half-open interval `(a, b]`.
    ///
    /// Panics if `a > b`.
    pub fn count_roots_in(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b, "empty interval: a > b");
        self.sign_variations_at(a) - self.sign_variations_at(b)
    }
}

/// Scales a rational polynomial to the unique integer polynomial with
/// coprime coefficients and positive leading coefficient.
fn primitive(p: &RatPoly) -> IntPoly {
    p.primitive_integer_multiple()
}

/// Primitive integer multiple by a *positive* rational. The Sturm property
/// survives positive scaling only, so chain remainders must keep their
/// signs, unlike [`Polynomial::primitive_integer_multiple`] which fixes the
/// leading coefficient positive.
///
/// [`Polynomial::primitive_integer_multiple`]: crate::poly::Polynomial::primitive_integer_multiple
fn positive_primitive(p: &RatPoly) -> IntPoly {
    let normalized = p.primitive_integer_multiple();
    if p.leading().is_some_and(Signed::is_negative) {
        -&normalized
    } else {
        normalized
    }
}

/// The square-free part of an integer polynomial `p / gcd(p, p′)`, as a
/// primitive integer polynomial: same roots, all simple.
pub fn square_free_part(p: &IntPoly) -> IntPoly {
    primitive(&p.to_rational().square_free_part())
}

/// Convenience: distinct real roots of `p` in `(a, b]`.
pub fn count_roots_in(p: &RatPoly, a: &Rat, b: &Rat) -> usize {
    SturmChain::new(p).count_roots_in(a, b)
}
