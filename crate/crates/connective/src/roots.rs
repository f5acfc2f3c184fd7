//! Certified isolation of the least positive zero of the denominator
//! polynomial `D̃`, the side-condition checks that make the result
//! trustworthy, and the dominant-singularity diagnostic.
//!
//! The growth rate is `μ = 1/z_*` where `z_*` is the least positive zero
//! of `D̃`. Isolation is exact: a Sturm chain counts roots in half-open
//! rational intervals, a rational-root prescan catches exactly
//! representable answers (regular trees, the two-sided line), and
//! bisection with exact rational endpoints narrows the rest to a
//! requested width with the invariant that the interval contains exactly
//! one root and no root lies below it. Every pass/fail decision about the
//! returned interval is made in exact rational or interval arithmetic;
//! floating point appears only inside the explicitly numerical
//! dominant-singularity diagnostic.

use crate::asymptotics::{self, AmplitudeEstimate};
use crate::genfun::{self, FactorGenFun, GenFunError};
use crate::interval::RatInterval;
use crate::polyroots;
use crate::sturm::{square_free_part, SturmChain};
use crate::{Int, IntPoly, Rat, RatPoly};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Rational-root prescan is skipped when the constant or leading
/// coefficient exceeds this, to keep divisor enumeration trivial.
const RATIONAL_SCAN_LIMIT: u64 = 1_000_000;

/// Rounds of interval separation the spurious-root guard attempts before
/// giving up; each round shrinks the candidate interval by 2^10.
const MAX_GUARD_ROUNDS: usize = 64;

/// Relative slack under which another singularity of equal modulus is
/// reported as a boundary case rather than a dominance failure.
const BOUNDARY_SLACK: f64 = 1e-7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,
    #[error("polynomial is not positive at the origin")]
    NotPositiveAtOrigin,
    #[error("polynomial has no positive real root")]
    NoPositiveRoot,
    #[error("least positive root could not be sign-bracketed (even multiplicity)")]
    DegenerateLeastRoot,
}

#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// An exact rational enclosure of the least positive root of a polynomial.
///
/// Either a genuine bracket `lo < hi` with a strict sign change across it
/// and Sturm count exactly one on `(lo, hi]`, or an exact hit `lo == hi`
/// with `p(lo) = 0`. For a search from the origin (the primary case —
/// `D̃(0) = 1`) the orientation is `p(lo) > 0 > p(hi)` and the Sturm count
/// on `(0, lo]` is zero. Values come only from
/// [`smallest_positive_root`] (or the pipeline built on it), which is what
/// makes the enclosure a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    lo: Rat,
    hi: Rat,
}

impl RootInterval {
    pub(crate) fn exact(r: Rat) -> Self {
        assert!(r.is_positive(), "root interval must be positive");
        Self { lo: r.clone(), hi: r }
    }

    pub(crate) fn bracketed(lo: Rat, hi: Rat) -> Self {
        assert!(lo.is_positive() && lo < hi, "invalid root bracket");
        Self { lo, hi }
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
        (&self.lo + &self.hi) / Rat::from_integer(Int::from(2))
    }

    /// Whether the root was hit exactly (zero-width interval).
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The enclosure as a general interval for exact evaluations.
    pub fn as_rat_interval(&self) -> RatInterval {
        if self.is_exact() {
            RatInterval::point(self.lo.clone())
        } else {
            RatInterval::new(self.lo.clone(), self.hi.clone())
        }
    }

    /// Midpoint as a float, for reporting.
    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Outcome of one named validation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagStatus {
    Pass,
    /// The check sits exactly on its boundary: the conclusion that would
    /// need strict inequality is not available, but nothing is wrong.
    Boundary,
    Fail,
}

/// A named validation check with a human-readable explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub name: &'static str,
    pub status: DiagStatus,
    pub detail: String,
}

impl Diagnostic {
    fn pass(name: &'static str, detail: String) -> Self {
        Self { name, status: DiagStatus::Pass, detail }
    }

    fn boundary(name: &'static str, detail: String) -> Self {
        Self { name, status: DiagStatus::Boundary, detail }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self { name, status: DiagStatus::Fail, detail }
    }
}

/// Tuning knobs for [`connective_constant`].
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Maximum width of the isolated `z_*` interval.
    pub tol: Rat,
    /// Required relative gap between `z_*` and every other complex zero of
    /// `D̃` for the dominance check to pass outright.
    pub dominance_margin: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: Rat::new(Int::one(), Int::from(1_000_000_000_000u64)),
            dominance_margin: 1e-6,
        }
    }
}

/// The certified answer for one free product.
#[derive(Clone, Debug)]
pub struct ConnectiveResult {
    z_star: RootInterval,
    mu_lo: Rat,
    mu_hi: Rat,
    witness_poly: IntPoly,
    amplitude: Option<AmplitudeEstimate>,
    diagnostics: Vec<Diagnostic>,
}

impl ConnectiveResult {
    /// Enclosure of `z_* = 1/μ`.
    pub fn z_star(&self) -> &RootInterval {
        &self.z_star
    }

    /// Certified lower bound on μ (reciprocal of the upper `z_*` endpoint).
    pub fn mu_lo(&self) -> &Rat {
        &self.mu_lo
    }

    /// Certified upper bound on μ.
    pub fn mu_hi(&self) -> &Rat {
        &self.mu_hi
    }

    /// Midpoint of the μ enclosure as a float.
    pub fn mu_approx(&self) -> f64 {
        ((&self.mu_lo + &self.mu_hi) / Rat::from_integer(Int::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// The integer polynomial `D̃` whose least positive zero is `z_*`;
    /// since μ is a zero of the reversed polynomial, this witnesses that μ
    /// is algebraic.
    pub fn witness_poly(&self) -> &IntPoly {
        &self.witness_poly
    }

    /// Amplitude estimate, when the derivative enclosure allowed one.
    /// Trust it only when [`Self::certified`] holds.
    pub fn amplitude(&self) -> Option<&AmplitudeEstimate> {
        self.amplitude.as_ref()
    }

    /// All validation checks, in a fixed order.
    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    /// Whether every check passed (boundary outcomes count as certified;
    /// they are flagged, not failed).
    pub fn certified(&self) -> bool {
        self.diagnostics.iter().all(|d| d.status != DiagStatus::Fail)
    }

    /// Whether any check reported a boundary case.
    pub fn boundary_flagged(&self) -> bool {
        self.diagnostics.iter().any(|d| d.status == DiagStatus::Boundary)
    }
}

/// Isolates the least positive real root of `p` to within `tol`.
///
/// `p(0)` must be positive (the denominator normalization guarantees
/// `D̃(0) = 1`). The result is certified by Sturm counts: no root in
/// `(0, lo]`, exactly one in `(lo, hi]`. Rational roots are detected
/// exactly — via a rational-root prescan for small coefficients and via
/// midpoint hits during bisection — and returned as zero-width intervals.
pub fn smallest_positive_root(p: &RatPoly, tol: &Rat) -> Result<RootInterval, RootError> {
    if !tol.is_positive() {
        return Err(RootError::NonPositiveTolerance);
    }
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !p.eval(&Rat::zero()).is_positive() {
        return Err(RootError::NotPositiveAtOrigin);
    }
    let iso = Isolator::new(p);
    let bound = iso.cauchy_bound();
    iso.least_root_in(&Rat::zero(), &bound, tol)
}

/// Shared exact machinery: the polynomial, its square-free integer form,
/// and the Sturm chain used for all root counting.
struct Isolator {
    original: RatPoly,
    squarefree: IntPoly,
    chain: SturmChain,
}

impl Isolator {
    fn new(p: &RatPoly) -> Self {
        let squarefree = square_free_part(&p.primitive_integer_multiple());
        let chain = SturmChain::new(p);
        Self { original: p.clone(), squarefree, chain }
    }

    /// Cauchy bound `1 + max |c_k/c_d|`: every complex root has smaller
    /// modulus, so `(0, bound]` contains every positive real root.
    fn cauchy_bound(&self) -> Rat {
        let d = self.squarefree.degree().expect("nonzero polynomial");
        let lead = self.squarefree.leading().expect("nonzero polynomial").abs();
        let mut largest = Rat::zero();
        for c in &self.squarefree.coeffs()[..d] {
            largest = largest.max(Rat::new(c.abs(), lead.clone()));
        }
        Rat::one() + largest
    }

    /// Ascending candidate values for rational roots (u/v with u dividing
    /// the constant and v the leading coefficient of the square-free
    /// form), or `None` when the coefficients are too large to scan.
    fn rational_candidates(&self) -> Option<Vec<Rat>> {
        let constant = small_positive_divisors(&self.squarefree.coeff(0))?;
        let leading = small_positive_divisors(self.squarefree.leading().expect("nonzero"))?;
        let mut candidates: Vec<Rat> = Vec::with_capacity(constant.len() * leading.len());
        for &u in &constant {
            for &v in &leading {
                candidates.push(Rat::new(Int::from(u), Int::from(v)));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        Some(candidates)
    }

    /// Least root of the polynomial in `(a, b]`, to within `tol`.
    fn least_root_in(&self, a: &Rat, b: &Rat, tol: &Rat) -> Result<RootInterval, RootError> {
        if self.chain.count_roots_in(a, b) == 0 {
            return Err(RootError::NoPositiveRoot);
        }

        // Exact rational roots: the least root is a scan candidate exactly
        // when it is rational, so a candidate with a clean Sturm count of
        // one settles the answer; any other count means the least root in
        // range is irrational (below the first nonzero-count candidate).
        if let Some(candidates) = self.rational_candidates() {
            for r in candidates {
                if &r <= a || &r > b {
                    continue;
                }
                match self.chain.count_roots_in(a, &r) {
                    0 => continue,
                    1 if self.squarefree.eval_rat(&r).is_zero() => {
                        return Ok(RootInterval::exact(r));
                    }
                    _ => break,
                }
            }
        }

        let two = Rat::from_integer(Int::from(2));
        let mut lo = a.clone();
        let mut hi = b.clone();
        // Invariants: no root in (a, lo]; at least one root in (lo, hi].
        loop {
            if self.chain.count_roots_in(&lo, &hi) == 1
                && self.width_ok(&lo, &hi, tol)
                && lo.is_positive()
            {
                break;
            }
            let mid = (&lo + &hi) / &two;
            if self.squarefree.eval_rat(&mid).is_zero() {
                if self.chain.count_roots_in(&lo, &mid) == 1 {
                    return Ok(RootInterval::exact(mid));
                }
                // Another root hides below the midpoint hit.
                hi = mid;
                continue;
            }
            if self.chain.count_roots_in(&lo, &mid) == 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }

        // The bracket certificate: a strict sign change across the
        // interval. A least root of even multiplicity never produces one.
        // Searches from the origin always see + → − (the polynomial is
        // positive at 0); continuations past a skipped odd root see the
        // flipped orientation.
        let at_lo = self.original.eval(&lo);
        let at_hi = self.original.eval(&hi);
        if (at_lo.is_positive() && at_hi.is_negative())
            || (at_lo.is_negative() && at_hi.is_positive())
        {
            Ok(RootInterval::bracketed(lo, hi))
        } else {
            Err(RootError::DegenerateLeastRoot)
        }
    }

    fn width_ok(&self, lo: &Rat, hi: &Rat, tol: &Rat) -> bool {
        &(hi - lo) <= tol
    }
}

/// Positive divisors of `|n|` when `0 < |n| ≤` the scan limit.
fn small_positive_divisors(n: &Int) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > RATIONAL_SCAN_LIMIT {
        return None;
    }
    let mut divisors = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            divisors.push(k);
            divisors.push(n / k);
        }
        k += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    Some(divisors)
}

/// Runs the full pipeline for a factor family: build `D̃`, isolate `z_*`
/// (skipping roots that the cleared form manufactured out of vanishing
/// `B_i` or `Q_i`), run every validation check, and attach the amplitude.
pub fn connective_constant(
    factors: &[FactorGenFun],
    options: &SolveOptions,
) -> Result<ConnectiveResult, SolveError> {
    if !options.tol.is_positive() {
        return Err(RootError::NonPositiveTolerance.into());
    }
    let d = genfun::build_d(factors)?;
    let iso = Isolator::new(&d.to_rational());
    let z_star = isolate_valid_root(factors, &iso, &options.tol)?;

    let mut diagnostics = validate_with_denominator(factors, &d, &z_star);
    diagnostics.push(dominant_singularity_check(&d, &z_star, options.dominance_margin));
    let amplitude = asymptotics::amplitude_enclosure(factors, &z_star).ok();

    let mu_lo = z_star.hi().recip();
    let mu_hi = z_star.lo().recip();
    Ok(ConnectiveResult {
        z_star,
        mu_lo,
        mu_hi,
        witness_poly: d,
        amplitude,
        diagnostics,
    })
}

/// Least positive root of `D̃` that is not an artifact of denominator
/// clearing. A candidate interval containing a zero of some `B_i` or
/// `Q_i` is suspect: if the offending polynomial provably shares the root
/// (common factor with `D̃`), the root is skipped and the search
/// continues above it; otherwise the interval is refined until the
/// nearby-but-distinct zero falls outside it.
fn isolate_valid_root(
    factors: &[FactorGenFun],
    iso: &Isolator,
    tol: &Rat,
) -> Result<RootInterval, RootError> {
    let bound = iso.cauchy_bound();
    let mut search_from = Rat::zero();
    let mut z = iso.least_root_in(&search_from, &bound, tol)?;
    for _ in 0..MAX_GUARD_ROUNDS {
        let Some(offender) = offending_factor_poly(factors, &z) else {
            return Ok(z);
        };
        if shares_root(&iso.squarefree, &offender, &z) {
            search_from = z.hi().clone();
            z = iso.least_root_in(&search_from, &bound, tol)?;
        } else {
            // Distinct zeros crowding one interval; exact hits always
            // share, so there is genuine width to shrink.
            debug_assert!(!z.is_exact());
            let tighter = z.width() / Rat::from_integer(Int::from(1024));
            z = iso.least_root_in(&search_from, &bound, &tighter)?;
        }
    }
    Err(RootError::DegenerateLeastRoot)
}

/// Some `B_i` or `Q_i` with a zero inside the candidate interval, if any.
fn offending_factor_poly(factors: &[FactorGenFun], z: &RootInterval) -> Option<IntPoly> {
    for f in factors {
        for p in [f.denominator().clone(), f.b_polynomial()] {
            if p.degree().is_some_and(|d| d >= 1) && has_zero_in(&p, z) {
                return Some(p);
            }
        }
    }
    None
}

fn has_zero_in(p: &IntPoly, z: &RootInterval) -> bool {
    if p.eval_rat(z.lo()).is_zero() {
        return true;
    }
    if z.is_exact() {
        return false;
    }
    SturmChain::new(&p.to_rational()).count_roots_in(z.lo(), z.hi()) > 0
}

/// Whether `d` and `q` have a common zero inside the interval.
fn shares_root(d_squarefree: &IntPoly, q: &IntPoly, z: &RootInterval) -> bool {
    let g = d_squarefree.to_rational().gcd(&q.to_rational());
    match g.degree() {
        None | Some(0) => false,
        _ => {
            let gi = g.primitive_integer_multiple();
            if gi.eval_rat(z.lo()).is_zero() {
                return true;
            }
            if z.is_exact() {
                return false;
            }
            SturmChain::new(&g).count_roots_in(z.lo(), z.hi()) > 0
        }
    }
}

/// Runs the side-condition checks justifying `μ = 1/z_*`:
/// `factor_pole_radius` (`z_*` is below every factor's radius of
/// convergence), `factor_positivity` (each `M_i(z_*) > 0`),
/// `fixed_point_equation` (`Σ M_i/(1+M_i) = 1` at `z_*`), and
/// `derivative_negative` (`D̃′(z_*) < 0`, so the zero is simple). All four
/// are decided in exact rational interval arithmetic.
///
/// The factor family must be the one whose denominator polynomial
/// produced `z`, so rebuilding `D̃` here cannot fail.
pub fn validate_z_star(factors: &[FactorGenFun], z: &RootInterval) -> Vec<Diagnostic> {
    let d = genfun::build_d(factors).expect("factor family was validated upstream");
    validate_with_denominator(factors, &d, z)
}

fn validate_with_denominator(
    factors: &[FactorGenFun],
    d: &IntPoly,
    z: &RootInterval,
) -> Vec<Diagnostic> {
    let zi = z.as_rat_interval();
    vec![
        pole_radius_check(factors, z),
        positivity_check(factors, &zi),
        fixed_point_check(factors, &zi),
        derivative_check(d, &zi),
    ]
}

fn pole_radius_check(factors: &[FactorGenFun], z: &RootInterval) -> Diagnostic {
    const NAME: &str = "factor_pole_radius";
    let mut tightest: Option<Rat> = None;
    for (i, f) in factors.iter().enumerate() {
        if let Some(b) = f.pole_radius_lower_bound() {
            if z.hi() >= b {
                return Diagnostic::fail(
                    NAME,
                    format!(
                        "factor {i}: certified pole bound {} does not exceed z_* hi {}",
                        approx(b),
                        approx(z.hi())
                    ),
                );
            }
            if tightest.as_ref().is_none_or(|t| b < t) {
                tightest = Some(b.clone());
            }
        }
    }
    let detail = match tightest {
        None => "all factors polynomial: every radius of convergence is infinite".to_string(),
        Some(b) => format!(
            "z_* hi {} < {} (tightest certified factor pole bound)",
            approx(z.hi()),
            approx(&b)
        ),
    };
    Diagnostic::pass(NAME, detail)
}

fn positivity_check(factors: &[FactorGenFun], zi: &RatInterval) -> Diagnostic {
    const NAME: &str = "factor_positivity";
    let mut least: Option<Rat> = None;
    for (i, f) in factors.iter().enumerate() {
        let Some(value) = f.eval_interval(zi) else {
            return Diagnostic::fail(
                NAME,
                format!("factor {i}: denominator enclosure at z_* contains zero"),
            );
        };
        if !value.is_strictly_positive() {
            return Diagnostic::fail(
                NAME,
                format!("factor {i}: M_i(z_*) enclosure reaches down to {}", approx(value.lo())),
            );
        }
        if least.as_ref().is_none_or(|l| value.lo() < l) {
            least = Some(value.lo().clone());
        }
    }
    Diagnostic::pass(
        NAME,
        format!(
            "every M_i(z_*) is strictly positive (least lower bound {})",
            approx(&least.expect("at least two factors"))
        ),
    )
}

fn fixed_point_check(factors: &[FactorGenFun], zi: &RatInterval) -> Diagnostic {
    const NAME: &str = "fixed_point_equation";
    let mut sum = RatInterval::point(Rat::zero());
    for (i, f) in factors.iter().enumerate() {
        let p = zi.eval_poly(&f.numerator().to_rational());
        let b = zi.eval_poly(&f.b_polynomial().to_rational());
        let Some(term) = p.div(&b) else {
            return Diagnostic::fail(
                NAME,
                format!("factor {i}: 1 + M_i enclosure at z_* contains zero"),
            );
        };
        sum = sum.add(&term);
    }
    let one = Rat::one();
    if sum.is_point() && sum.lo() == &one {
        Diagnostic::pass(NAME, "Σ M_i/(1+M_i)(z_*) = 1 exactly".to_string())
    } else if sum.contains(&one) {
        Diagnostic::pass(
            NAME,
            format!(
                "Σ M_i/(1+M_i)(z_*) ∈ [{}, {}] ∋ 1",
                approx(sum.lo()),
                approx(sum.hi())
            ),
        )
    } else {
        Diagnostic::fail(
            NAME,
            format!(
                "Σ M_i/(1+M_i)(z_*) ∈ [{}, {}], which excludes 1",
                approx(sum.lo()),
                approx(sum.hi())
            ),
        )
    }
}

fn derivative_check(d: &IntPoly, zi: &RatInterval) -> Diagnostic {
    const NAME: &str = "derivative_negative";
    let enclosure = zi.eval_poly(&d.to_rational().derivative());
    if enclosure.is_strictly_negative() {
        Diagnostic::pass(
            NAME,
            format!(
                "D̃′(z_*) ∈ [{}, {}] < 0: the root is simple",
                approx(enclosure.lo()),
                approx(enclosure.hi())
            ),
        )
    } else {
        Diagnostic::fail(
            NAME,
            format!(
                "D̃′(z_*) enclosure [{}, {}] is not strictly negative",
                approx(enclosure.lo()),
                approx(enclosure.hi())
            ),
        )
    }
}

/// Checks that `z_*` is the unique singularity of minimal modulus: every
/// other complex zero of `D̃` must have modulus at least
/// `z_*·(1 + margin)`. Zeros of equal modulus (the two-sided line) are a
/// boundary flag, not a failure. This is the one deliberately numerical
/// diagnostic: zeros come from a simultaneous-iteration solver on the
/// square-free part, and a solver failure is reported as a failed check,
/// never as a wrong answer.
pub fn dominant_singularity_check(d: &IntPoly, z: &RootInterval, margin: f64) -> Diagnostic {
    const NAME: &str = "dominant_singularity";
    let squarefree = square_free_part(d);
    let coeffs = squarefree.to_f64();
    let roots = match polyroots::all_roots(coeffs.coeffs()) {
        Ok(roots) => roots,
        Err(e) => return Diagnostic::fail(NAME, format!("all-roots solver failed: {e}")),
    };
    let mid = z.approx();
    let Some((index, distance)) = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (i, (r - mid).norm()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
    else {
        return Diagnostic::fail(NAME, "no numeric zeros found".to_string());
    };
    if distance > 1e-6 * mid.max(1.0) {
        return Diagnostic::fail(
            NAME,
            format!("numeric zero set does not contain z_* (nearest at distance {distance:e})"),
        );
    }
    let min_other = roots
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, r)| r.norm())
        .fold(f64::INFINITY, f64::min);
    if min_other.is_infinite() {
        return Diagnostic::pass(NAME, "D̃ has no other zeros".to_string());
    }
    let z_hi = z.hi().to_f64().unwrap_or(f64::NAN);
    let ratio = min_other / z_hi;
    if ratio >= 1.0 + margin {
        Diagnostic::pass(
            NAME,
            format!("least other-zero modulus {min_other:.9} = {ratio:.6}·z_*"),
        )
    } else if ratio >= 1.0 - BOUNDARY_SLACK {
        Diagnostic::boundary(
            NAME,
            format!(
                "another zero lies on the circle |z| = z_* (modulus {min_other:.9}); \
                 growth rate is unaffected but the pure asymptotic law is not certified"
            ),
        )
    } else {
        Diagnostic::fail(
            NAME,
            format!("zero of modulus {min_other:.9} = {ratio:.6}·z_* lies inside the circle"),
        )
    }
}

/// Compact decimal rendering of a rational for diagnostic text.
fn approx(x: &Rat) -> String {
    match x.to_f64() {
        Some(v) => format!("{v:.9}"),
        None => x.to_string(),
    }
}
