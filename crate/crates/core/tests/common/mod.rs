#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shiftbin::BernoulliEnsemble;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Probabilities drawn from one of several regimes: spread over (0, 1),
/// small, large, clustered, two-point, or sprinkled with exact 0s and 1s.
pub fn random_probs<R: Rng>(rng: &mut R, m: usize) -> Vec<f64> {
    let style = rng.random_range(0..6);
    let centre: f64 = rng.random_range(0.05..0.95);
    let (a, b): (f64, f64) = (rng.random(), rng.random());
    (0..m)
        .map(|_| match style {
            0 => rng.random::<f64>(),
            1 => rng.random_range(0.0..0.1),
            2 => rng.random_range(0.9..1.0),
            3 => (centre + rng.random_range(-0.05..0.05)).clamp(0.0, 1.0),
            4 => {
                if rng.random_bool(0.5) {
                    a
                } else {
                    b
                }
            }
            _ => match rng.random_range(0..10) {
                0 => 0.0,
                1 => 1.0,
                _ => rng.random(),
            },
        })
        .collect()
}

pub fn random_ensemble<R: Rng>(rng: &mut R, m: usize) -> BernoulliEnsemble {
    BernoulliEnsemble::new(random_probs(rng, m)).expect("generated probabilities are valid")
}

/// Half the summands at 1/2, the rest at 1/3.
pub fn half_half(m: usize) -> BernoulliEnsemble {
    let mut probs = vec![0.5; m / 2];
    probs.resize(m, 1.0 / 3.0);
    BernoulliEnsemble::new(probs).unwrap()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let var: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    cov / var
}

/// Largest entrywise gap between two laws after aligning offsets.
pub fn max_entry_gap(a: &shiftbin::IntegerDistribution, b: &shiftbin::IntegerDistribution) -> f64 {
    let lo = a.offset().min(b.offset());
    let hi = a.max_support().max(b.max_support());
    (lo..=hi)
        .map(|k| (a.mass_at(k) - b.mass_at(k)).abs())
        .fold(0.0, f64::max)
}
