use std::f64::consts::SQRT_2;
use std::ops::RangeInclusive;

use libm::erfc;

use super::IntegerDistribution;
use crate::error::{Error, Result};

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

fn upper_tail(z: f64) -> f64 {
    0.5 * erfc(z / SQRT_2)
}

/// Mass of `N(0, 1)` on `(lo, hi]`, using whichever tail keeps the
/// subtraction well conditioned.
fn interval_mass(lo: f64, hi: f64) -> f64 {
    let mass = if hi <= 0.0 {
        normal_cdf(hi) - normal_cdf(lo)
    } else if lo >= 0.0 {
        upper_tail(lo) - upper_tail(hi)
    } else {
        1.0 - normal_cdf(lo) - upper_tail(hi)
    };
    mass.max(0.0)
}

/// Normal law with continuity correction on the integers of `support`.
///
/// Cell `k` gets `Phi((k + 1/2 - mean)/sd) - Phi((k - 1/2 - mean)/sd)`; the
/// two extreme cells absorb the tails beyond the support.
pub fn discretized_normal_pmf(
    mean: f64,
    variance: f64,
    support: RangeInclusive<i64>,
) -> Result<IntegerDistribution> {
    if !(variance > 0.0 && variance.is_finite()) {
        return Err(Error::Degenerate(format!(
            "normal approximation needs positive variance, got {variance}"
        )));
    }
    if !mean.is_finite() {
        return Err(Error::InvalidParameter {
            name: "mean",
            value: mean,
            reason: "must be finite",
        });
    }
    let (lo, hi) = (*support.start(), *support.end());
    if lo > hi {
        return Err(Error::InvalidParameter {
            name: "support",
            value: (hi - lo) as f64,
            reason: "support range is empty",
        });
    }
    let sd = variance.sqrt();
    let z = |x: f64| (x - mean) / sd;
    let masses = (lo..=hi)
        .map(|k| {
            let left = if k == lo {
                f64::NEG_INFINITY
            } else {
                z(k as f64 - 0.5)
            };
            let right = if k == hi {
                f64::INFINITY
            } else {
                z(k as f64 + 0.5)
            };
            interval_mass(left, right)
        })
        .collect();
    Ok(IntegerDistribution::from_masses(lo, masses))
}
