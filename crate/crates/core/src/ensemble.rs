//! Bernoulli ensembles and the moment scalars derived from them.
//!
//! Power sums are accumulated in stored order by plain summation. For the
//! ensemble sizes this crate targets (up to a few thousand summands) the
//! rounding error stays far below every tolerance used downstream.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Success probabilities `p_1, ..., p_m` of independent Bernoulli summands.
///
/// The law of their sum `W` is the Poisson-binomial distribution. The stored
/// order is preserved; it is only consulted by order-dependent quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliEnsemble {
    probs: Vec<f64>,
}

impl BernoulliEnsemble {
    /// Validates `probs` and wraps it. Rejects empty input and any entry that
    /// is non-finite or outside `[0, 1]`.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyEnsemble);
        }
        if let Some((index, &value)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_finite() || !(0.0..=1.0).contains(*p))
        {
            return Err(Error::InvalidProbability { index, value });
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Number of summands.
    pub fn m(&self) -> usize {
        self.probs.len()
    }

    pub fn moments(&self) -> MomentSummary {
        MomentSummary::of(self)
    }

    /// Probabilities sorted ascending (stable for ties).
    pub fn sorted_ascending(&self) -> Vec<f64> {
        let mut sorted = self.probs.clone();
        sorted.sort_by(f64::total_cmp);
        sorted
    }
}

/// Scalars derived from an ensemble: power sums, variance, third central
/// moment and the `min(p, q)` aggregates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub m: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    pub lambda4: f64,
    /// `Var W = lambda1 - lambda2`.
    pub sigma2: f64,
    /// `sum_i min(p_i, 1 - p_i)`.
    pub v: f64,
    /// `max_i min(p_i, 1 - p_i)`.
    pub v_star: f64,
    /// `E(W - EW)^3 = lambda1 - 3 lambda2 + 2 lambda3`.
    pub mu3: f64,
}

impl MomentSummary {
    pub fn of(ensemble: &BernoulliEnsemble) -> Self {
        let mut lambda = [0.0_f64; 4];
        let mut v = 0.0;
        let mut v_star = 0.0_f64;
        for &p in ensemble.probs() {
            let p2 = p * p;
            lambda[0] += p;
            lambda[1] += p2;
            lambda[2] += p2 * p;
            lambda[3] += p2 * p2;
            let side = p.min(1.0 - p);
            v += side;
            v_star = v_star.max(side);
        }
        let [lambda1, lambda2, lambda3, lambda4] = lambda;
        Self {
            m: ensemble.m(),
            lambda1,
            lambda2,
            lambda3,
            lambda4,
            sigma2: lambda1 - lambda2,
            v,
            v_star,
            mu3: lambda1 - 3.0 * lambda2 + 2.0 * lambda3,
        }
    }
}

/// Deterministic ensemble generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `p_i = i * M / (m + 1)` for `i = 1..=m`.
    UniformSpread,
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform-spread" => Ok(Self::UniformSpread),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UniformSpread => f.write_str("uniform-spread"),
        }
    }
}

/// Builds a generated ensemble with `m` summands and maximum-probability
/// parameter `max_prob` in `(0, 1]`.
pub fn ensemble_from_spec(
    kind: GeneratorKind,
    m: usize,
    max_prob: f64,
) -> Result<BernoulliEnsemble> {
    if m == 0 {
        return Err(Error::InvalidParameter {
            name: "m",
            value: 0.0,
            reason: "need at least one summand",
        });
    }
    if !(max_prob > 0.0 && max_prob <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "max_prob",
            value: max_prob,
            reason: "must lie in (0, 1]",
        });
    }
    let probs = match kind {
        GeneratorKind::UniformSpread => {
            let denom = (m + 1) as f64;
            (1..=m).map(|i| i as f64 * max_prob / denom).collect()
        }
    };
    BernoulliEnsemble::new(probs)
}

/// Parses the probability list format: one decimal per line, blank lines and
/// `#` comments ignored. Errors carry 1-based line numbers.
pub fn parse_probability_lines(text: &str) -> Result<BernoulliEnsemble> {
    let mut probs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line.parse().map_err(|_| Error::Parse {
            line: i + 1,
            message: format!("`{line}` is not a number"),
        })?;
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("probability {value} outside [0, 1]"),
            });
        }
        probs.push(value);
    }
    BernoulliEnsemble::new(probs)
}
