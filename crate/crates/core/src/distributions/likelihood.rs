use crate::error::{Error, Result};

/// Unnormalised binomial log-likelihood `x ln p + (n - x) ln(1 - p)` with a
/// possibly fractional number of trials `n`.
///
/// No binomial coefficient is included. For fractional `n` the value lies
/// between the log-likelihoods at `floor(n)` and `ceil(n)`.
pub fn fractional_binomial_loglik(x: u64, n: f64, p: f64) -> Result<f64> {
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::Domain(format!(
            "trial count n = {n} must be positive"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} is not a probability")));
    }
    let xf = x as f64;
    if xf > n.ceil() {
        return Err(Error::Domain(format!(
            "x = {x} exceeds the trial count ceil({n})"
        )));
    }
    let failures = n - xf;
    // 0 * ln 0 is taken as 0; anything else on the boundary is impossible.
    let success_term = match (x, p) {
        (0, _) => 0.0,
        (_, 0.0) => {
            return Err(Error::Domain(format!("x = {x} successes with p = 0")));
        }
        _ => xf * p.ln(),
    };
    let failure_term = if failures == 0.0 {
        0.0
    } else if p == 1.0 {
        return Err(Error::Domain(format!("{failures} failures with p = 1")));
    } else {
        failures * (-p).ln_1p()
    };
    Ok(success_term + failure_term)
}
