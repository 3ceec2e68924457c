//! Distance-based indicators against a reference set, and the additive
//! epsilon indicator.

use crate::error::{Error, Result};
use crate::scalar::{euclidean, Scalar};
use crate::solution::SolutionSet;

fn check_pair<T: Scalar>(
    a: &SolutionSet<T>,
    r: &SolutionSet<T>,
    op: &'static str,
) -> Result<()> {
    a.check_same_m(r)?;
    if a.is_empty() || r.is_empty() {
        return Err(Error::EmptySet(op));
    }
    Ok(())
}

/// Superiority distance: only objectives where `a` is worse than `r` count.
pub(crate) fn d_plus<T: Scalar>(a: &[T], r: &[T]) -> T {
    a.iter()
        .zip(r)
        .map(|(&x, &y)| {
            let d = (x - y).max(T::zero());
            d * d
        })
        .sum::<T>()
        .sqrt()
}

fn nearest<T: Scalar>(from: &[T], to: &SolutionSet<T>, dist: fn(&[T], &[T]) -> T) -> T {
    to.iter()
        .map(|q| dist(from, q))
        .fold(T::infinity(), T::min)
}

/// `(1/n) * (sum_a d(a, R)^p)^(1/p)` with `d` the Euclidean distance to the
/// nearest reference point.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN
pub fn gd<T: Scalar>(a: &SolutionSet<T>, r: &SolutionSet<T>, p: T) -> Result<T> {
    check_pair(a, r, "gd")?;
    if !(p >= T::one()) {
        return Err(Error::InvalidConfig(format!("gd requires p >= 1, got {p}")));
    }
    let sum: T = a.iter().map(|x| nearest(x, r, euclidean).powf(p)).sum();
    Ok(sum.powf(p.recip()) / T::from_count(a.len()))
}

/// Mean over `a` of the smallest superiority distance to `r`.
pub fn gd_plus<T: Scalar>(a: &SolutionSet<T>, r: &SolutionSet<T>) -> Result<T> {
    check_pair(a, r, "gd_plus")?;
    let sum: T = a.iter().map(|x| nearest(x, r, d_plus)).sum();
    Ok(sum / T::from_count(a.len()))
}

/// Mean over `r` of the Euclidean distance to the nearest member of `a`.
pub fn igd<T: Scalar>(a: &SolutionSet<T>, r: &SolutionSet<T>) -> Result<T> {
    check_pair(a, r, "igd")?;
    let sum: T = r.iter().map(|q| nearest(q, a, euclidean)).sum();
    Ok(sum / T::from_count(r.len()))
}

/// Mean over `r` of the smallest superiority distance from a member of `a`.
pub fn igd_plus<T: Scalar>(a: &SolutionSet<T>, r: &SolutionSet<T>) -> Result<T> {
    check_pair(a, r, "igd_plus")?;
    let sum: T = r
        .iter()
        .map(|q| a.iter().map(|x| d_plus(x, q)).fold(T::infinity(), T::min))
        .sum();
    Ok(sum / T::from_count(r.len()))
}

/// `max_b min_a max_i (a_i - b_i)`. A non-positive value means `a` weakly
/// covers `b`. Passing a reference set as `b` gives the unary form.
pub fn epsilon_additive<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<T> {
    check_pair(a, b, "epsilon_additive")?;
    Ok(b.iter()
        .map(|y| {
            a.iter()
                .map(|x| {
                    x.iter()
                        .zip(y)
                        .map(|(&xi, &yi)| xi - yi)
                        .fold(T::neg_infinity(), T::max)
                })
                .fold(T::infinity(), T::min)
        })
        .fold(T::neg_infinity(), T::max))
}
