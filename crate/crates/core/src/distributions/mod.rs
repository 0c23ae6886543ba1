//! Finitely supported integer laws: the exact Poisson-binomial law and the
//! approximations compared against it.

mod approx;
mod binomial;
mod exact;
mod likelihood;
mod normal;
mod poisson;

pub use approx::{approximate, Approximation, Method};
pub use binomial::{
    binomial_masses, fit_shifted_binomial, fit_two_param_binomial, one_param_binomial_pmf,
    shifted_binomial_pmf, two_param_binomial_pmf, ShiftedBinomialFit, TwoParamFit,
};
pub use exact::{brute_force_pmf, exact_pmf, BRUTE_FORCE_LIMIT};
pub use likelihood::fractional_binomial_loglik;
pub use normal::{discretized_normal_pmf, normal_cdf};
pub use poisson::{poisson_pmf, shifted_poisson_pmf, MASS_FLOOR};

use crate::error::{Error, Result};

/// A probability mass function on a contiguous block of integers.
///
/// `masses()[k]` is `P(X = offset + k)`. Leading and trailing zero masses are
/// trimmed on construction, so both ends of the stored block carry mass.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerDistribution {
    offset: i64,
    masses: Vec<f64>,
}

impl IntegerDistribution {
    /// Validates and tightens a mass vector. Masses must be finite and
    /// non-negative with total within `1e-9` of one.
    pub fn new(offset: i64, masses: Vec<f64>) -> Result<Self> {
        if let Some(&w) = masses.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidParameter {
                name: "mass",
                value: w,
                reason: "masses must be finite and non-negative",
            });
        }
        let total: f64 = masses.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter {
                name: "total mass",
                value: total,
                reason: "masses must sum to one",
            });
        }
        Ok(Self::from_masses(offset, masses))
    }

    /// Point mass at `k`.
    pub fn point_mass(k: i64) -> Self {
        Self {
            offset: k,
            masses: vec![1.0],
        }
    }

    /// Trusted constructor for masses produced inside the crate.
    pub(crate) fn from_masses(offset: i64, mut masses: Vec<f64>) -> Self {
        let Some(first) = masses.iter().position(|&w| w != 0.0) else {
            // All mass underflowed; cannot happen for a valid law.
            return Self::point_mass(offset);
        };
        let last = masses.iter().rposition(|&w| w != 0.0).unwrap_or(first);
        masses.truncate(last + 1);
        masses.drain(..first);
        Self {
            offset: offset + first as i64,
            masses,
        }
    }

    /// Smallest support point.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Largest support point.
    pub fn max_support(&self) -> i64 {
        self.offset + self.masses.len() as i64 - 1
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    pub fn is_point_mass(&self) -> bool {
        self.masses.len() == 1
    }

    /// `P(X = k)`, zero outside the stored block.
    pub fn mass_at(&self, k: i64) -> f64 {
        let idx = k - self.offset;
        if idx < 0 {
            return 0.0;
        }
        self.masses.get(idx as usize).copied().unwrap_or(0.0)
    }

    /// `(k, P(X = k))` pairs over the stored block.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.masses
            .iter()
            .enumerate()
            .map(move |(i, &w)| (self.offset + i as i64, w))
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    /// `P(X > k)`.
    pub fn tail_above(&self, k: i64) -> f64 {
        self.iter().filter(|&(j, _)| j > k).map(|(_, w)| w).sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(k, w)| k as f64 * w).sum()
    }

    /// `E(X - c)^order` about the mean `c`.
    pub fn central_moment(&self, order: i32) -> f64 {
        let mean = self.mean();
        self.iter()
            .map(|(k, w)| (k as f64 - mean).powi(order) * w)
            .sum()
    }

    pub fn variance(&self) -> f64 {
        self.central_moment(2)
    }
}
