//! Empirical audits of the closed-form bounds against exactly computed
//! distances.

mod common;

use rand::Rng;
use shiftbin::bounds::eta_term;
use shiftbin::{
    bound_report, corollary_bounds, ehm_bound, exact_pmf, fit_shifted_binomial,
    one_param_binomial_pmf, run_sweep, tv_distance, two_param_binomial_pmf, two_param_bound,
    BernoulliEnsemble, Grid, Method,
};

use common::{random_ensemble, rng};

#[test]
fn binomial_bounds_dominate_their_approximations() {
    let mut rng = rng(0xE4);
    let mut checked = (0, 0);
    for _ in 0..1000 {
        let m = rng.random_range(5..=200);
        let e = random_ensemble(&mut rng, m);
        let exact = exact_pmf(&e);
        if let Ok(bound) = ehm_bound(&e) {
            let tv = tv_distance(&exact, &one_param_binomial_pmf(&e));
            assert!(
                bound >= tv,
                "one-parameter bound {bound} < tv {tv} for {:?}",
                e.probs()
            );
            checked.0 += 1;
        }
        let ms = e.moments();
        if let (Ok(bound), Ok(approx)) = (two_param_bound(&ms, &exact), two_param_binomial_pmf(&ms))
        {
            let tv = tv_distance(&exact, &approx);
            assert!(
                bound >= tv,
                "two-parameter bound {bound} < tv {tv} for {:?}",
                e.probs()
            );
            checked.1 += 1;
        }
    }
    assert!(checked.0 > 900 && checked.1 > 900, "{checked:?}");
}

#[test]
fn eta_never_exceeds_exponential_caps() {
    let mut rng = rng(0xE7A);
    for _ in 0..500 {
        let m = rng.random_range(2..=150);
        let e = random_ensemble(&mut rng, m);
        let sigma2 = e.moments().sigma2;
        let cap = (-sigma2 / 4.0).exp() + (1.0 - sigma2 / 4.0).exp();
        let n = rng.random_range(0..=m as u64);
        let s = rng.random_range(-3..=m as i64);
        assert!(eta_term(&e, sigma2, n, s) <= cap);
    }
}

#[test]
fn sweep_rows_respect_invariants() {
    let rows = run_sweep(100, &Grid::default()).unwrap();
    for row in &rows {
        assert!(row.tv.iter().all(|d| (0.0..=1.0).contains(d)), "{row:?}");
        assert!(
            row.tv_bound >= row.tv_of(Method::ShiftedBinomial),
            "{row:?}"
        );
    }
    // deterministic, including under parallel evaluation
    assert_eq!(rows, run_sweep(100, &Grid::default()).unwrap());
}

/// The simplified bounds drop negative terms, so they should sit above the
/// full bound once `v` is moderate. Reported, not enforced.
#[test]
fn corollary_soft_audit() {
    let mut rng = rng(0xC0);
    let mut below = Vec::new();
    let mut audited = 0;
    for _ in 0..300 {
        let m = rng.random_range(20..=200);
        let e = random_ensemble(&mut rng, m);
        let ms = e.moments();
        if ms.v < 6.0 {
            continue;
        }
        let Ok(fit) = fit_shifted_binomial(&ms) else {
            continue;
        };
        let cor = corollary_bounds(&ms, &fit).unwrap();
        let full = bound_report(&e);
        audited += 1;
        if cor.tv < full.tv_bound {
            below.push((m, cor.tv, full.tv_bound));
        }
    }
    if !below.is_empty() {
        eprintln!(
            "warning: corollary below theorem bound on {}/{audited} ensembles, e.g. {:?}",
            below.len(),
            below[0]
        );
    }
    assert!(audited > 0);
}

#[test]
fn half_half_one_parameter_bound_is_constant() {
    // p = 5/12, sum (p_i - p)^2 = m/144: the bound tends to (1/144)/(35/144) = 1/35.
    let limit = 1.0 / 35.0;
    for m in [200, 2000] {
        let mut probs = vec![0.5; m / 2];
        probs.resize(m, 1.0 / 3.0);
        let b = ehm_bound(&BernoulliEnsemble::new(probs).unwrap()).unwrap();
        let finite_m = limit * m as f64 / (m as f64 + 1.0);
        assert!((b - finite_m).abs() < 1e-12, "m={m}: {b} vs {finite_m}");
    }
}
