use std::fmt;
use std::str::FromStr;

use super::binomial::{fit_shifted_binomial, fit_two_param_binomial, one_param_binomial_pmf};
use super::poisson::shifted_poisson_params;
use super::{
    binomial_masses, discretized_normal_pmf, poisson_pmf, shifted_binomial_pmf,
    IntegerDistribution, MASS_FLOOR,
};
use crate::ensemble::BernoulliEnsemble;
use crate::error::{Error, Result};

/// The six approximations compared against the exact law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `Po(lambda1)`.
    Poisson,
    /// Translated Poisson matching mean and variance.
    ShiftedPoisson,
    /// `Bi(m, lambda1/m)`.
    Binomial1,
    /// `Bi(floor(lambda1^2/lambda2), lambda1/n)`.
    Binomial2,
    /// Continuity-corrected normal with mean `lambda1`, variance `sigma2`.
    Normal,
    /// Three-moment shifted binomial.
    ShiftedBinomial,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Poisson,
        Method::ShiftedPoisson,
        Method::Binomial1,
        Method::Binomial2,
        Method::Normal,
        Method::ShiftedBinomial,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            Method::Poisson => "poisson",
            Method::ShiftedPoisson => "shifted-poisson",
            Method::Binomial1 => "binomial1",
            Method::Binomial2 => "binomial2",
            Method::Normal => "normal",
            Method::ShiftedBinomial => "shifted-binomial",
        }
    }

    /// CSV column spelling.
    pub fn column(self) -> &'static str {
        match self {
            Method::Poisson => "poisson",
            Method::ShiftedPoisson => "shifted_poisson",
            Method::Binomial1 => "binomial1",
            Method::Binomial2 => "binomial2",
            Method::Normal => "normal",
            Method::ShiftedBinomial => "shifted_binomial",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || m.column() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
                format!(
                    "unknown method `{s}`, expected one of: {}",
                    valid.join(", ")
                )
            })
    }
}

/// A fitted approximation together with the parameters that define it.
#[derive(Debug, Clone, PartialEq)]
pub struct Approximation {
    pub method: Method,
    pub params: Vec<(&'static str, f64)>,
    pub dist: IntegerDistribution,
}

/// Fits `method` to the ensemble. The normal law is discretised on the
/// support `0..=m` of the exact law.
pub fn approximate(ensemble: &BernoulliEnsemble, method: Method) -> Result<Approximation> {
    let ms = ensemble.moments();
    let m = ensemble.m();
    let (params, dist) = match method {
        Method::Poisson => (
            vec![("lambda", ms.lambda1)],
            poisson_pmf(ms.lambda1, MASS_FLOOR)?,
        ),
        Method::ShiftedPoisson => {
            let (shift, rate) = shifted_poisson_params(&ms)?;
            let base = poisson_pmf(rate, MASS_FLOOR)?;
            (
                vec![("s", shift as f64), ("lambda", rate)],
                IntegerDistribution::from_masses(base.offset() + shift, base.masses().to_vec()),
            )
        }
        Method::Binomial1 => (
            vec![("n", m as f64), ("p", ms.lambda1 / m as f64)],
            one_param_binomial_pmf(ensemble),
        ),
        Method::Binomial2 => {
            let fit = fit_two_param_binomial(&ms)?;
            (
                vec![("n", fit.n as f64), ("p", fit.p)],
                IntegerDistribution::from_masses(0, binomial_masses(fit.n, fit.p)),
            )
        }
        Method::Normal => {
            if !(ms.sigma2 > 0.0) {
                return Err(Error::Degenerate(
                    "variance is zero, normal approximation is undefined".into(),
                ));
            }
            (
                vec![("mean", ms.lambda1), ("variance", ms.sigma2)],
                discretized_normal_pmf(ms.lambda1, ms.sigma2, 0..=m as i64)?,
            )
        }
        Method::ShiftedBinomial => {
            let fit = fit_shifted_binomial(&ms)?;
            (
                vec![
                    ("n", fit.n as f64),
                    ("p", fit.p),
                    ("s", fit.s as f64),
                    ("n*", fit.n_star),
                    ("p*", fit.p_star),
                    ("s*", fit.s_star),
                ],
                shifted_binomial_pmf(&fit),
            )
        }
    };
    Ok(Approximation {
        method,
        params,
        dist,
    })
}
