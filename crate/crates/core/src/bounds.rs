//! Closed-form error bounds for the shifted binomial approximation and for
//! the one- and two-parameter binomial approximations.
//!
//! Every constituent is reported so a bound can be audited against the exact
//! distance. Nothing here is an estimate of the distance itself; the bounds
//! are upper bounds and are typically loose.

use std::f64::consts::E;
use std::fmt;

use crate::distributions::{
    fit_shifted_binomial, fit_two_param_binomial, IntegerDistribution, ShiftedBinomialFit,
};
use crate::ensemble::{BernoulliEnsemble, MomentSummary};
use crate::error::{Error, Result};

/// Flags attached to a [`BoundReport`].
#[derive(Debug, Clone, PartialEq)]
pub enum BoundNote {
    /// The fit could not be formed; every numeric field is `+inf`.
    Degenerate(String),
    /// `sigma2 (lambda3 - lambda4) - (lambda2 - lambda3)^2` came out negative
    /// through rounding and was clamped to zero.
    ClampedNumerator(f64),
    /// Value of the tail term when only the exponential caps are used.
    EtaExponentialOnly(f64),
}

impl fmt::Display for BoundNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundNote::Degenerate(why) => write!(f, "degenerate: {why}"),
            BoundNote::ClampedNumerator(v) => write!(f, "A1/A3 numerator {v:e} clamped to 0"),
            BoundNote::EtaExponentialOnly(v) => write!(f, "eta (exponential caps only) = {v}"),
        }
    }
}

/// Constituents and values of the shifted binomial bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// `(1 - p^{n+1} - q^{n+1}) / sigma2`.
    pub k: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    /// Tail term for the part of `W` outside `[s, n + s]`.
    pub eta: f64,
    /// `K (4 A1 + 2 A2) + eta`.
    pub tv_bound: f64,
    /// `K (8 A3 + 4 A4) + eta`.
    pub loc_bound: f64,
    pub tv_corollary: f64,
    pub loc_corollary: f64,
    pub notes: Vec<BoundNote>,
}

impl BoundReport {
    /// Report for an ensemble where no fit exists.
    pub fn degenerate(reason: impl Into<String>) -> Self {
        let inf = f64::INFINITY;
        Self {
            k: inf,
            a1: inf,
            a2: inf,
            a3: inf,
            a4: inf,
            eta: inf,
            tv_bound: inf,
            loc_bound: inf,
            tv_corollary: inf,
            loc_corollary: inf,
            notes: vec![BoundNote::Degenerate(reason.into())],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.notes
            .iter()
            .any(|n| matches!(n, BoundNote::Degenerate(_)))
    }
}

/// Tail term. Probabilities are taken in ascending order, so the left factor
/// is `s` times the `s`-th smallest probability and the right factor is
/// `(m - n - s)` times the largest one.
pub fn eta_term(ensemble: &BernoulliEnsemble, sigma2: f64, n: u64, s: i64) -> f64 {
    let sorted = ensemble.sorted_ascending();
    let m = sorted.len() as i64;
    let n = n as i64;
    let left_cap = (-sigma2 / 4.0).exp();
    let right_cap = (1.0 - sigma2 / 4.0).exp();

    let left = if s >= 1 {
        let idx = (s.min(m) - 1) as usize;
        (s as f64 * sorted[idx]).min(left_cap)
    } else {
        0.0
    };
    let right_count = m - n - s;
    let right = if right_count >= 1 {
        (right_count as f64 * sorted[sorted.len() - 1]).min(right_cap)
    } else {
        0.0
    };
    left + right
}

/// Evaluates the total variation and local bounds for the shifted binomial
/// fit, together with the simplified corollary bounds.
pub fn theorem_bounds(
    ensemble: &BernoulliEnsemble,
    ms: &MomentSummary,
    fit: &ShiftedBinomialFit,
) -> Result<BoundReport> {
    if !(ms.sigma2 > 0.0) {
        return Err(Error::Degenerate("variance is zero".into()));
    }
    let sigma2 = ms.sigma2;
    let n = fit.n as f64;
    let (p, q) = (fit.p, 1.0 - fit.p);
    let k = (1.0 - p.powf(n + 1.0) - q.powf(n + 1.0)) / sigma2;

    let mut notes = Vec::new();
    let raw_numerator = sigma2 * (ms.lambda3 - ms.lambda4) - (ms.lambda2 - ms.lambda3).powi(2);
    let numerator = if raw_numerator < 0.0 {
        notes.push(BoundNote::ClampedNumerator(raw_numerator));
        0.0
    } else {
        raw_numerator
    };
    let rounding = ms.lambda1 * (fit.frac_n + fit.frac_s) + n * fit.frac_s;

    let a1 = numerator / (sigma2 * (ms.v / 2.0 - 1.0).max(1.0));
    let a2 = rounding / n;
    let a3 = numerator / (sigma2 * (ms.v / 3.0 - 2.0).max(1.0).powf(1.5));
    let a4 = rounding / (n * (ms.v - 1.0).max(1.0).sqrt());

    let eta = eta_term(ensemble, sigma2, fit.n, fit.s);
    notes.push(BoundNote::EtaExponentialOnly(
        (-sigma2 / 4.0).exp() + (1.0 - sigma2 / 4.0).exp(),
    ));

    let corollary = corollary_bounds(ms, fit)?;
    Ok(BoundReport {
        k,
        a1,
        a2,
        a3,
        a4,
        eta,
        tv_bound: k * (4.0 * a1 + 2.0 * a2) + eta,
        loc_bound: k * (8.0 * a3 + 4.0 * a4) + eta,
        tv_corollary: corollary.tv,
        loc_corollary: corollary.loc,
        notes,
    })
}

/// Fits the shifted binomial and evaluates its bounds, falling back to a
/// degenerate report when no fit exists.
pub fn bound_report(ensemble: &BernoulliEnsemble) -> BoundReport {
    let ms = ensemble.moments();
    fit_shifted_binomial(&ms)
        .and_then(|fit| theorem_bounds(ensemble, &ms, &fit))
        .unwrap_or_else(|e| BoundReport::degenerate(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorollaryBounds {
    pub tv: f64,
    pub loc: f64,
}

/// Simplified bounds with all fractional parts replaced by one.
pub fn corollary_bounds(ms: &MomentSummary, fit: &ShiftedBinomialFit) -> Result<CorollaryBounds> {
    if !(ms.sigma2 > 0.0) {
        return Err(Error::Degenerate("variance is zero".into()));
    }
    if !(ms.v > 0.0) {
        return Err(Error::Degenerate("v is zero".into()));
    }
    if fit.n < 1 {
        return Err(Error::FitOutOfRange("n must be at least 1".into()));
    }
    Ok(corollary_values(ms.lambda1, fit.n as f64, ms.sigma2, ms.v))
}

pub(crate) fn corollary_values(lambda1: f64, n: f64, sigma2: f64, v: f64) -> CorollaryBounds {
    let tail = 2.0 * (1.0 - sigma2 / 4.0).exp();
    CorollaryBounds {
        tv: (17.0 + 2.0 * lambda1 / n) / sigma2 + tail,
        loc: (222.0 + 12.0 * lambda1 / n) / (sigma2 * v.sqrt()) + tail,
    }
}

/// Bound on `d_TV(W, Bi(m, lambda1/m))` for the one-parameter binomial.
pub fn ehm_bound(ensemble: &BernoulliEnsemble) -> Result<f64> {
    let m = ensemble.m() as f64;
    let p = ensemble.moments().lambda1 / m;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Degenerate(format!("mean probability {p} is 0 or 1")));
    }
    let q = 1.0 - p;
    let spread: f64 = ensemble.probs().iter().map(|pi| (pi - p).powi(2)).sum();
    Ok((1.0 - p.powf(m + 1.0) - q.powf(m + 1.0)) / ((m + 1.0) * p * q) * spread)
}

/// Bound on `d_TV(W, Bi(n, p))` for the two-parameter binomial, including
/// the exact `P(W > n)` read off `exact`.
pub fn two_param_bound(ms: &MomentSummary, exact: &IntegerDistribution) -> Result<f64> {
    let fit = fit_two_param_binomial(ms)?;
    if !(fit.p < 1.0) {
        return Err(Error::FitOutOfRange(format!(
            "p = {} is not below 1",
            fit.p
        )));
    }
    let q = 1.0 - fit.p;
    let sigma = ms.sigma2.sqrt();
    let damping = if sigma > 0.0 {
        (E.sqrt() / sigma).min(1.0)
    } else {
        1.0
    };
    let dispersion = (ms.lambda3 / ms.lambda1 - (ms.lambda2 / ms.lambda1).powi(2)).max(0.0);
    let n = fit.n as f64;
    Ok(4.0 / q * damping * dispersion
        + ms.lambda2 * fit.frac_n() / (ms.lambda1 * q * n)
        + exact.tail_above(fit.n as i64))
}
