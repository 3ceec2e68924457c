//! Cardinality indicators.

use crate::dominance::{dominates_vec, nondominated_front, unique_nondominated_front};
use crate::error::{Error, Result};
use crate::preprocess::union_of;
use crate::scalar::Scalar;
use crate::solution::SolutionSet;

/// Size of the nondominated front of `a`, duplicates included.
pub fn nfs<T: Scalar>(a: &SolutionSet<T>) -> usize {
    nondominated_front(a).len()
}

/// Unique nondominated front ratio of `a` against the combined unique front
/// of `a` and `sets`. `a` may or may not be one of `sets`.
pub fn unfr<T: Scalar>(a: &SolutionSet<T>, sets: &[SolutionSet<T>]) -> Result<T> {
    let mut all = Vec::with_capacity(sets.len() + 1);
    all.push(a.clone());
    all.extend(sets.iter().cloned());
    let reference = unique_nondominated_front(&union_of(&all)?);
    if reference.is_empty() {
        return Err(Error::EmptySet("unfr"));
    }
    let own = unique_nondominated_front(a);
    let kept = own
        .iter()
        .filter(|x| !reference.iter().any(|r| dominates_vec(r, x)))
        .count();
    Ok(T::from_count(kept) / T::from_count(reference.len()))
}
