//! Simultaneous numerical root finding for real polynomials.
//!
//! The dominant-singularity diagnostic needs every complex zero of the
//! denominator polynomial, not just the least positive one, so this module
//! provides a Durand–Kerner (Weierstrass) iteration: all roots at once,
//! refined with a Newton polish and accepted only when the relative
//! backward residual `|p(r)| / Σ|c_k||r|^k` is at machine-noise scale.
//! Callers are expected to hand in a square-free polynomial — the exact
//! layer can always strip multiplicities first — so roots are simple and
//! the polish converges quadratically; a cluster the iteration cannot
//! resolve surfaces as a residual failure, never as a silent bad answer.

use num_complex::Complex64;
use thiserror::Error;

/// Iteration budget; generous since the polynomials here have degree ≤ ~30.
const MAX_ITERATIONS: usize = 400;

/// Accepted relative backward residual. Well-conditioned evaluation noise
/// is a small multiple of machine epsilon (≈2.2e-16) per coefficient.
const RESIDUAL_BOUND: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum PolyRootsError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("coefficients must be finite, got {0}")]
    NonFiniteCoefficient(f64),
    #[error("root {root} did not certify: relative residual {residual:e} exceeds {bound:e}")]
    ResidualTooLarge {
        root: Complex64,
        residual: f64,
        bound: f64,
    },
}

/// All complex roots of the polynomial with the given ascending real
/// coefficients, each certified by a backward-residual check and sorted by
/// (modulus, real part, imaginary part) for deterministic output.
///
/// Multiplicities are not resolved: a root of multiplicity m appears as m
/// nearby approximations (or fails certification if too ill-conditioned);
/// pass a square-free polynomial when only the root set matters.
pub fn all_roots(coeffs: &[f64]) -> Result<Vec<Complex64>, PolyRootsError> {
    for &c in coeffs {
        if !c.is_finite() {
            return Err(PolyRootsError::NonFiniteCoefficient(c));
        }
    }
    let mut coeffs: Vec<f64> = coeffs.to_vec();
    while coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(PolyRootsError::ZeroPolynomial);
    }

    // Deflate exact zero roots: a factor z^k contributes k roots at 0.
    let zeros_at_origin = coeffs.iter().take_while(|&&c| c == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
    let reduced = &coeffs[zeros_at_origin..];

    if reduced.len() > 1 {
        let lead = *reduced.last().expect("nonempty");
        let monic: Vec<f64> = reduced.iter().map(|c| c / lead).collect();
        roots.extend(durand_kerner(&monic)?);
    }

    roots.sort_by(|a, b| {
        let key = |z: &Complex64| (z.norm(), z.re, z.im);
        key(a).partial_cmp(&key(b)).expect("finite roots")
    });
    Ok(roots)
}

/// Horner evaluation of a real-coefficient polynomial at a complex point.
fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Evaluation scale Σ|c_k||z|^k, the natural denominator for a backward
/// (relative) residual.
fn eval_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * r + c.abs();
    }
    acc.max(f64::MIN_POSITIVE)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// Durand–Kerner iteration on a monic polynomial with nonzero constant
/// term, followed by a Newton polish and residual certification.
fn durand_kerner(monic: &[f64]) -> Result<Vec<Complex64>, PolyRootsError> {
    let degree = monic.len() - 1;
    debug_assert!(degree >= 1 && monic[0] != 0.0 && monic[degree] == 1.0);

    // Standard starting configuration: powers of a point just inside the
    // unit circle that is neither real nor a root of unity, scaled to the
    // Cauchy root bound so large-rooted polynomials start in range.
    let bound = 1.0 + monic[..degree].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| bound * seed.powu(k as u32 + 1))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut largest_step = 0.0f64;
        for i in 0..degree {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart and keep going.
                roots[i] += Complex64::new(1e-8, 1e-8) * (i as f64 + 1.0);
                largest_step = f64::MAX;
                continue;
            }
            let step = eval(monic, zi) / denom;
            roots[i] = zi - step;
            largest_step = largest_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if largest_step < 1e-15 {
            break;
        }
    }

    // Newton polish: quadratic convergence on simple roots; keep the best
    // iterate by residual so a non-converging step cannot make things worse.
    let deriv = derivative(monic);
    for root in &mut roots {
        let mut best = *root;
        let mut best_residual = eval(monic, best).norm() / eval_scale(monic, best);
        let mut current = best;
        for _ in 0..4 {
            let dp = eval(&deriv, current);
            if dp.norm() == 0.0 {
                break;
            }
            current -= eval(monic, current) / dp;
            let residual = eval(monic, current).norm() / eval_scale(monic, current);
            if residual < best_residual {
                best = current;
                best_residual = residual;
            }
        }
        *root = best;
    }

    for &root in &roots {
        let residual = eval(monic, root).norm() / eval_scale(monic, root);
        // A NaN residual (overflowed evaluation) must fail, not pass.
        if residual.is_nan() || residual > RESIDUAL_BOUND {
            return Err(PolyRootsError::ResidualTooLarge {
                root,
                residual,
                bound: RESIDUAL_BOUND,
            });
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_moduli(coeffs: &[f64]) -> Vec<f64> {
        all_roots(coeffs).unwrap().iter().map(|z| z.norm()).collect()
    }

    #[test]
    fn quadratic_real_roots() {
        // (z−1)(z−2)
        let roots = all_roots(&[2.0, -3.0, 1.0]).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((roots[1] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quadratic_complex_pair() {
        // z² + 1
        let roots = all_roots(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(roots.len(), 2);
        for z in &roots {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!(z.re.abs() < 1e-12);
        }
        // Deterministic order: −i before +i.
        assert!(roots[0].im < 0.0 && roots[1].im > 0.0);
    }

    #[test]
    fn denominator_of_two_factor_product() {
        // −2z³ − 2z² + 1: least positive root ≈ 0.565198, complex pair of
        // modulus ≈ 0.940556 (root product = 1/2 forces |pair|² = 0.5/z*).
        let moduli = sorted_moduli(&[1.0, 0.0, -2.0, -2.0]);
        assert_eq!(moduli.len(), 3);
        assert!((moduli[0] - 0.5651977173836394).abs() < 1e-10);
        assert!((moduli[1] - 0.9405563125721478).abs() < 1e-9);
        assert!((moduli[2] - 0.9405563125721478).abs() < 1e-9);
    }

    #[test]
    fn zero_roots_are_deflated() {
        // z²(z−3)
        let roots = all_roots(&[0.0, 0.0, -3.0, 1.0]).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0], Complex64::new(0.0, 0.0));
        assert_eq!(roots[1], Complex64::new(0.0, 0.0));
        assert!((roots[2] - Complex64::new(3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn constants_and_degenerate_inputs() {
        assert_eq!(all_roots(&[]), Err(PolyRootsError::ZeroPolynomial));
        assert_eq!(all_roots(&[0.0, 0.0]), Err(PolyRootsError::ZeroPolynomial));
        assert_eq!(all_roots(&[5.0]).unwrap(), vec![]);
        assert!(matches!(
            all_roots(&[1.0, f64::NAN]),
            Err(PolyRootsError::NonFiniteCoefficient(_))
        ));
    }

    #[test]
    fn large_roots_are_reached() {
        // (z − 100)(z + 101): starting circle must scale to the root bound.
        let roots = all_roots(&[-10100.0, 1.0, 1.0]).unwrap();
        assert!((roots[0] - Complex64::new(100.0, 0.0)).norm() < 1e-8);
        assert!((roots[1] - Complex64::new(-101.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn degree_ten_cyclotomic_style() {
        // z^10 − 1: ten roots on the unit circle.
        let mut coeffs = vec![0.0; 11];
        coeffs[0] = -1.0;
        coeffs[10] = 1.0;
        let roots = all_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 10);
        for z in &roots {
            assert!((z.norm() - 1.0).abs() < 1e-10);
            assert!(eval(&coeffs, *z).norm() < 1e-9);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Polynomials built from distinct integer roots are recovered.
        #[test]
        fn recovers_constructed_simple_roots(rs in prop::collection::btree_set(-8i64..=8, 1..=6)) {
            let roots_in: Vec<f64> = rs.iter().map(|&r| r as f64).collect();
            let mut coeffs = vec![1.0];
            for &r in &roots_in {
                // multiply the ascending coefficients by (z − r)
                let mut next = vec![0.0; coeffs.len() + 1];
                for (k, &c) in coeffs.iter().enumerate() {
                    next[k] -= r * c;
                    next[k + 1] += c;
                }
                coeffs = next;
            }
            let found = all_roots(&coeffs).unwrap();
            prop_assert_eq!(found.len(), roots_in.len());
            let mut sorted_in = roots_in.clone();
            sorted_in.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut found_re: Vec<f64> = found.iter().map(|z| z.re).collect();
            found_re.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in found_re.iter().zip(&sorted_in) {
                prop_assert!((a - b).abs() < 1e-7, "{} vs {}", a, b);
            }
        }
    }
}
