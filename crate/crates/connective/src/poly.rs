//! Dense univariate polynomials, generic over the coefficient type.
//!
//! Coefficients are stored in ascending order of the power of `z` with
//! trailing zeros trimmed, so the representation of a polynomial is unique
//! and `degree == coeffs.len() - 1` for nonzero polynomials. The arithmetic
//! needs only ring operations ([`Scalar`]); the Euclidean operations used by
//! Sturm sequences additionally need exact division ([`FieldScalar`]) and are
//! only meaningful for exact fields such as `Rat`.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Int, Rat};

/// Coefficient ring bound: everything [`Polynomial`] arithmetic requires.
/// Blanket-implemented, so `Int`, `Rat` and `f64` all qualify.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Coefficient field bound: scalars with division, required by the Euclidean
/// operations (`div_rem`, `gcd`, square-free part).
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Div<Output = Self> {}

/// Dense univariate polynomial `c_0 + c_1 z + … + c_d z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros. The zero polynomial is the empty coefficient list.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![T::one()] }
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Ascending coefficients with trailing zeros trimmed.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial, otherwise the degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        // The exponent runs 1, 2, … as a scalar built by repeated increment,
        // staying inside the ring bound (no `From<usize>` required).
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Applies `f` to every coefficient (e.g. integer → rational lift).
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: FieldScalar> Polynomial<T> {
    /// Euclidean division: returns `(q, r)` with `self = q·d + r` and
    /// `deg r < deg d`. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len();
        if self.coeffs.len() < dd {
            return (Self::zero(), self.clone());
        }
        let lead = d.coeffs[dd - 1].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd - 1].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divides by the leading coefficient (zero polynomial unchanged).
    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let l = l.clone();
                Self::from_coeffs(self.coeffs.into_iter().map(|c| c / l.clone()).collect())
            }
        }
    }

    /// The square-free part `self / gcd(self, self′)`: same roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        q
    }
}

impl Polynomial<Int> {
    /// Gcd of the coefficients (zero for the zero polynomial; always ≥ 0).
    pub fn content(&self) -> Int {
        use num_integer::Integer;
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Lifts to rational coefficients.
    pub fn to_rational(&self) -> Polynomial<Rat> {
        self.map(|c| Rat::from_integer(c.clone()))
    }

    /// Horner evaluation at a rational point without lifting the whole
    /// polynomial.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Coefficients converted to `f64` (numeric diagnostics only).
    pub fn to_f64(&self) -> Polynomial<f64> {
        use num_traits::ToPrimitive;
        self.map(|c| c.to_f64().unwrap_or(f64::INFINITY))
    }
}

impl Polynomial<Rat> {
    /// The unique primitive integer polynomial that is a positive rational
    /// multiple of `self` (same roots, integer coefficients, content 1).
    pub fn primitive_integer_multiple(&self) -> Polynomial<Int> {
        use num_integer::Integer;
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut lcm = Int::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let p = Polynomial::from_coeffs(ints);
        let content = p.content();
        let scaled: Vec<Int> = p.coeffs.iter().map(|c| c / &content).collect();
        let mut out = Polynomial::from_coeffs(scaled);
        if out.leading().is_some_and(|l| l.is_negative()) {
            out = -&out;
        }
        out
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ if unit_mag => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Shorthand for an integer polynomial from `i64` coefficients.
pub fn int_poly(coeffs: &[i64]) -> Polynomial<Int> {
    Polynomial::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
}
