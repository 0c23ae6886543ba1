//! Exact Poisson-binomial laws and their approximations.
//!
//! The law of a sum `W` of independent Bernoulli variables is computed
//! exactly and compared with six approximations, among them a shifted
//! binomial `Bi(n, p) * delta_s` whose three parameters match the mean,
//! variance and third central moment of `W`. The crate also evaluates the
//! closed-form error bounds for these approximations so they can be audited
//! against exactly computed distances.
//!
//! ```
//! use shiftbin::{approximate, exact_pmf, tv_distance, BernoulliEnsemble, Method};
//!
//! let e = BernoulliEnsemble::new(vec![0.2, 0.4, 0.6, 0.8]).unwrap();
//! let exact = exact_pmf(&e);
//! let approx = approximate(&e, Method::ShiftedBinomial).unwrap();
//! assert!((approx.dist.mean() - exact.mean()).abs() < 1e-12);
//! println!("TV = {}", tv_distance(&exact, &approx.dist));
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod csv;
pub mod distributions;
pub mod ensemble;
pub mod error;
pub mod metrics;
pub mod sweep;

pub use bounds::{
    bound_report, corollary_bounds, ehm_bound, theorem_bounds, two_param_bound, BoundNote,
    BoundReport, CorollaryBounds,
};
pub use distributions::{
    approximate, brute_force_pmf, discretized_normal_pmf, exact_pmf, fit_shifted_binomial,
    fractional_binomial_loglik, one_param_binomial_pmf, poisson_pmf, shifted_binomial_pmf,
    shifted_poisson_pmf, two_param_binomial_pmf, Approximation, IntegerDistribution, Method,
    ShiftedBinomialFit,
};
pub use ensemble::{ensemble_from_spec, BernoulliEnsemble, GeneratorKind, MomentSummary};
pub use error::{Error, Result};
pub use metrics::{loc_distance, tv_distance};
pub use sweep::{run_sweep, Grid, SweepRow};
