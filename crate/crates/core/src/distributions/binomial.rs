//! Binomial masses and the three binomial-family fits: one parameter
//! (`Bi(m, lambda1/m)`), two parameters (`n = floor(lambda1^2/lambda2)`) and
//! the three-moment shifted fit.

use super::IntegerDistribution;
use crate::ensemble::{BernoulliEnsemble, MomentSummary};
use crate::error::{Error, Result};

/// Relative tolerance for treating a moment solution as an exact integer
/// before flooring. Without it, `n* = 4.999999999999999` from rounding would
/// floor to 4 and break exactness on `{p, 1}`-valued ensembles.
const INTEGER_SNAP: f64 = 1e-9;

fn snap_to_integer(x: f64, scale: f64) -> f64 {
    let nearest = x.round();
    if (x - nearest).abs() <= INTEGER_SNAP * scale.max(1.0) {
        nearest
    } else {
        x
    }
}

/// Masses of `Bi(n, p)` for `k = 0..=n`.
///
/// Computed by the ratio recurrence outwards from the mode and normalised, so
/// no factorials or powers are ever formed.
pub fn binomial_masses(n: u64, p: f64) -> Vec<f64> {
    let len = n as usize + 1;
    let mut w = vec![0.0; len];
    if p <= 0.0 {
        w[0] = 1.0;
        return w;
    }
    if p >= 1.0 {
        w[len - 1] = 1.0;
        return w;
    }
    let q = 1.0 - p;
    let odds = p / q;
    let nf = n as f64;
    let mode = (((nf + 1.0) * p).floor() as usize).min(n as usize);
    w[mode] = 1.0;
    for k in mode..len - 1 {
        let kf = k as f64;
        w[k + 1] = w[k] * (nf - kf) / (kf + 1.0) * odds;
    }
    for k in (1..=mode).rev() {
        let kf = k as f64;
        w[k - 1] = w[k] * kf / (nf - kf + 1.0) / odds;
    }
    let total: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= total);
    w
}

/// Three-moment shifted binomial fit.
///
/// `n_star`, `p_star`, `s_star` solve the moment equations over the reals;
/// `n`, `s` are their floors and `p` is perturbed so that `n p + s` equals
/// the mean exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedBinomialFit {
    pub n_star: f64,
    pub p_star: f64,
    pub s_star: f64,
    pub n: u64,
    pub p: f64,
    pub s: i64,
    /// Fractional part of `n_star`.
    pub frac_n: f64,
    /// Fractional part of `s_star`.
    pub frac_s: f64,
}

impl ShiftedBinomialFit {
    pub fn mean(&self) -> f64 {
        self.n as f64 * self.p + self.s as f64
    }

    pub fn variance(&self) -> f64 {
        self.n as f64 * self.p * (1.0 - self.p)
    }
}

/// Matches mean, variance and third central moment of `W` with a shifted
/// binomial.
pub fn fit_shifted_binomial(ms: &MomentSummary) -> Result<ShiftedBinomialFit> {
    if !(ms.sigma2 > 0.0) {
        return Err(Error::Degenerate(
            "variance is zero, every probability is 0 or 1".into(),
        ));
    }
    let curvature = ms.lambda2 - ms.lambda3;
    if !(curvature > 0.0) {
        return Err(Error::Degenerate(
            "lambda2 equals lambda3, the success probability would be 0".into(),
        ));
    }
    let p_star = curvature / ms.sigma2;
    if !(p_star < 1.0) {
        return Err(Error::FitOutOfRange(format!(
            "p* = {p_star} is not below 1"
        )));
    }
    let n_star = ms.sigma2 / (p_star * (1.0 - p_star));
    let s_star = ms.lambda1 - n_star * p_star;

    let n_real = snap_to_integer(n_star, n_star);
    let s_real = snap_to_integer(s_star, ms.lambda1);
    if n_real < 1.0 {
        return Err(Error::FitOutOfRange(format!(
            "n* = {n_star} gives fewer than one trial"
        )));
    }
    let n = n_real.floor();
    let s = s_real.floor();
    // Algebraically (n* p* + {s*}) / n; written against lambda1 so the mean
    // matches to rounding.
    let p = (ms.lambda1 - s) / n;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::FitOutOfRange(format!(
            "p = {p} outside (0, 1) for n = {n}"
        )));
    }
    Ok(ShiftedBinomialFit {
        n_star,
        p_star,
        s_star,
        n: n as u64,
        p,
        s: s as i64,
        frac_n: n_real - n,
        frac_s: s_real - s,
    })
}

/// `Bi(n, p) * delta_s`.
pub fn shifted_binomial_pmf(fit: &ShiftedBinomialFit) -> IntegerDistribution {
    IntegerDistribution::from_masses(fit.s, binomial_masses(fit.n, fit.p))
}

/// `Bi(m, lambda1 / m)`.
pub fn one_param_binomial_pmf(ensemble: &BernoulliEnsemble) -> IntegerDistribution {
    let m = ensemble.m();
    let p = (ensemble.moments().lambda1 / m as f64).clamp(0.0, 1.0);
    IntegerDistribution::from_masses(0, binomial_masses(m as u64, p))
}

/// Two-moment binomial fit `n = floor(lambda1^2 / lambda2)`, `p = lambda1 / n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoParamFit {
    /// `lambda1^2 / lambda2` before flooring.
    pub n_real: f64,
    pub n: u64,
    pub p: f64,
}

impl TwoParamFit {
    /// `{lambda1^2 / lambda2}`.
    pub fn frac_n(&self) -> f64 {
        self.n_real - self.n as f64
    }
}

pub fn fit_two_param_binomial(ms: &MomentSummary) -> Result<TwoParamFit> {
    if !(ms.lambda2 > 0.0) {
        return Err(Error::Degenerate(
            "lambda2 is zero, every probability is 0".into(),
        ));
    }
    let ratio = ms.lambda1 * ms.lambda1 / ms.lambda2;
    let n_real = snap_to_integer(ratio, ratio);
    let n = n_real.floor();
    if n < 1.0 {
        return Err(Error::FitOutOfRange(format!(
            "lambda1^2/lambda2 = {ratio} gives fewer than one trial"
        )));
    }
    let p = ms.lambda1 / n;
    if p > 1.0 {
        return Err(Error::FitOutOfRange(format!(
            "p = lambda1/n = {p} exceeds 1"
        )));
    }
    Ok(TwoParamFit {
        n_real,
        n: n as u64,
        p,
    })
}

pub fn two_param_binomial_pmf(ms: &MomentSummary) -> Result<IntegerDistribution> {
    let fit = fit_two_param_binomial(ms)?;
    Ok(IntegerDistribution::from_masses(
        0,
        binomial_masses(fit.n, fit.p),
    ))
}
