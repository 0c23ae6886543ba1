use super::IntegerDistribution;
use crate::ensemble::BernoulliEnsemble;
use crate::error::{Error, Result};

/// Largest ensemble [`brute_force_pmf`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Exact law of `W = X_1 + ... + X_m` by folding in one Bernoulli at a time,
/// `new[k] = old[k] (1 - p_i) + old[k - 1] p_i`.
pub fn exact_pmf(ensemble: &BernoulliEnsemble) -> IntegerDistribution {
    let m = ensemble.m();
    let mut pmf = vec![0.0; m + 1];
    pmf[0] = 1.0;
    for (i, &p) in ensemble.probs().iter().enumerate() {
        let q = 1.0 - p;
        for k in (1..=i + 1).rev() {
            pmf[k] = pmf[k] * q + pmf[k - 1] * p;
        }
        pmf[0] *= q;
    }
    IntegerDistribution::from_masses(0, pmf)
}

/// Exact law of `W` by summing the probability of each of the `2^m` outcome
/// vectors. Only meant as an independent check on [`exact_pmf`].
pub fn brute_force_pmf(ensemble: &BernoulliEnsemble) -> Result<IntegerDistribution> {
    let m = ensemble.m();
    if m > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            m,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    // outcome[mask] = P(X_i = bit i of mask for every i seen so far)
    let mut outcome = Vec::with_capacity(1 << m);
    outcome.push(1.0_f64);
    for &p in ensemble.probs() {
        let q = 1.0 - p;
        let half = outcome.len();
        for j in 0..half {
            let w = outcome[j];
            outcome.push(w * p);
            outcome[j] = w * q;
        }
    }
    let mut pmf = vec![0.0; m + 1];
    for (mask, w) in outcome.into_iter().enumerate() {
        pmf[mask.count_ones() as usize] += w;
    }
    Ok(IntegerDistribution::from_masses(0, pmf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ens(p: &[f64]) -> BernoulliEnsemble {
        BernoulliEnsemble::new(p.to_vec()).unwrap()
    }

    #[test]
    fn two_fair_coins() {
        let d = exact_pmf(&ens(&[0.5, 0.5]));
        assert_eq!(d.offset(), 0);
        assert_eq!(d.masses(), &[0.25, 0.5, 0.25]);
    }

    #[test]
    fn deterministic_summands_give_point_mass() {
        let d = exact_pmf(&ens(&[1.0, 1.0, 0.0]));
        assert_eq!(d, IntegerDistribution::point_mass(2));
        assert_eq!(brute_force_pmf(&ens(&[1.0, 1.0, 0.0])).unwrap(), d);
    }

    #[test]
    fn four_point_ensemble_matches_enumeration() {
        // Frozen from an exact rational enumeration of the 16 outcomes:
        // [24, 154, 269, 154, 24] / 625.
        let want = [0.0384, 0.2464, 0.4304, 0.2464, 0.0384];
        let e = ens(&[0.2, 0.4, 0.6, 0.8]);
        let brute = brute_force_pmf(&e).unwrap();
        let dp = exact_pmf(&e);
        for (k, w) in want.iter().enumerate() {
            assert!((brute.masses()[k] - w).abs() < 1e-15, "k={k}");
            assert!((dp.masses()[k] - w).abs() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(brute_force_pmf(&ens(&[0.5])).unwrap().masses(), &[0.5, 0.5]);
        let d = brute_force_pmf(&ens(&[0.3, 0.3])).unwrap();
        for (got, want) in d.masses().iter().zip([0.49, 0.42, 0.09]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn brute_force_rejects_large_ensembles() {
        let e = ens(&[0.5; 21]);
        assert_eq!(
            brute_force_pmf(&e),
            Err(Error::TooLarge { m: 21, limit: 20 })
        );
    }
}
