//! Exact distances between integer laws. Points outside a stored support
//! count as zero mass.

use crate::distributions::IntegerDistribution;

fn abs_differences<'a>(
    a: &'a IntegerDistribution,
    b: &'a IntegerDistribution,
) -> impl Iterator<Item = f64> + 'a {
    let lo = a.offset().min(b.offset());
    let hi = a.max_support().max(b.max_support());
    (lo..=hi).map(move |k| (a.mass_at(k) - b.mass_at(k)).abs())
}

/// Total variation distance `1/2 sum_k |a(k) - b(k)|`, clamped to `[0, 1]`
/// against rounding in the sum.
pub fn tv_distance(a: &IntegerDistribution, b: &IntegerDistribution) -> f64 {
    (0.5 * abs_differences(a, b).sum::<f64>()).min(1.0)
}

/// Local distance `max_k |a(k) - b(k)|`.
pub fn loc_distance(a: &IntegerDistribution, b: &IntegerDistribution) -> f64 {
    abs_differences(a, b).fold(0.0, f64::max)
}
