use libm::lgamma;

use super::IntegerDistribution;
use crate::ensemble::MomentSummary;
use crate::error::{Error, Result};

/// Default right-tail cut for Poisson supports.
pub const MASS_FLOOR: f64 = 1e-14;

/// Below this rate `e^{-lambda}` is representable and the forward recurrence
/// from zero is used.
const FORWARD_RECURRENCE_LIMIT: f64 = 700.0;

/// `Po(lambda)` truncated on the right once the remaining tail is below
/// `mass_floor`. Masses are not renormalised after truncation.
pub fn poisson_pmf(lambda: f64, mass_floor: f64) -> Result<IntegerDistribution> {
    if !(lambda.is_finite() && lambda >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "lambda",
            value: lambda,
            reason: "rate must be finite and non-negative",
        });
    }
    if !(mass_floor > 0.0 && mass_floor <= 1e-10) {
        return Err(Error::InvalidParameter {
            name: "mass_floor",
            value: mass_floor,
            reason: "must lie in (0, 1e-10]",
        });
    }
    if lambda == 0.0 {
        return Ok(IntegerDistribution::point_mass(0));
    }

    let mode = lambda.floor() as usize;
    let mut masses = Vec::with_capacity(mode + 64);
    if lambda < FORWARD_RECURRENCE_LIMIT {
        masses.push((-lambda).exp());
        for k in 1..=mode {
            let prev = masses[k - 1];
            masses.push(prev * lambda / k as f64);
        }
    } else {
        masses.resize(mode + 1, 0.0);
        let kf = mode as f64;
        masses[mode] = (-lambda + kf * lambda.ln() - lgamma(kf + 1.0)).exp();
        for k in (1..=mode).rev() {
            masses[k - 1] = masses[k] * k as f64 / lambda;
        }
    }

    // Past the mode the ratio t_{j+1}/t_j = lambda/(j+1) keeps shrinking, so
    // the tail beyond k is at most t_k r / (1 - r) with r = lambda/(k+1).
    let mut k = mode;
    loop {
        let r = lambda / (k + 1) as f64;
        let t = masses[k];
        if r < 1.0 && t * r / (1.0 - r) < mass_floor {
            break;
        }
        masses.push(t * r);
        k += 1;
    }
    Ok(IntegerDistribution::from_masses(0, masses))
}

/// Translated Poisson matching the first two moments: shift
/// `s = floor(lambda1 - sigma2)`, rate `sigma2 + {lambda1 - sigma2}`.
pub fn shifted_poisson_pmf(ms: &MomentSummary, mass_floor: f64) -> Result<IntegerDistribution> {
    let (shift, rate) = shifted_poisson_params(ms)?;
    let base = poisson_pmf(rate, mass_floor)?;
    Ok(IntegerDistribution::from_masses(
        base.offset() + shift,
        base.masses().to_vec(),
    ))
}

pub(crate) fn shifted_poisson_params(ms: &MomentSummary) -> Result<(i64, f64)> {
    if !(ms.sigma2 > 0.0) {
        return Err(Error::Degenerate(
            "variance is zero, shifted Poisson is undefined".into(),
        ));
    }
    let gap = ms.lambda1 - ms.sigma2;
    let shift = gap.floor();
    Ok((shift as i64, ms.sigma2 + (gap - shift)))
}
