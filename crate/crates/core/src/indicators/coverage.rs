//! Dominance-based binary indicators.

use crate::dominance::{dominates_vec, weakly_dominates_vec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::SolutionSet;

/// Multiset intersection size of `from` and `other`, and what remains of
/// `from` once the shared copies are taken out.
fn split_common<'a, T: Scalar>(from: &[&'a [T]], other: &[&'a [T]]) -> (usize, Vec<&'a [T]>) {
    let mut used = vec![false; other.len()];
    let mut rest = Vec::with_capacity(from.len());
    let mut common = 0;
    for &x in from {
        match (0..other.len()).find(|&j| !used[j] && other[j] == x) {
            Some(j) => {
                used[j] = true;
                common += 1;
            }
            None => rest.push(x),
        }
    }
    (common, rest)
}

/// Counts members of `rest` that dominate some member of `other`, plus
/// members that neither weakly dominate nor are dominated by any of them.
fn winners_and_neutrals<T: Scalar>(rest: &[&[T]], other: &[&[T]]) -> usize {
    rest.iter()
        .filter(|&&x| {
            let wins = other.iter().any(|y| dominates_vec(x, y));
            let neutral = !other
                .iter()
                .any(|y| weakly_dominates_vec(x, y) || dominates_vec(y, x));
            wins || neutral
        })
        .count()
}

/// Contribution indicator. The shared part is the multiset intersection of
/// objective vectors and counts half for each side, so `CI(A,B) + CI(B,A)`
/// is 1 whenever either set is nonempty.
pub fn contribution<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<T> {
    a.check_same_m(b)?;
    if a.is_empty() && b.is_empty() {
        return Err(Error::EmptySet("contribution"));
    }
    let pa: Vec<&[T]> = a.iter().collect();
    let pb: Vec<&[T]> = b.iter().collect();
    let (common, rest_a) = split_common(&pa, &pb);
    let (_, rest_b) = split_common(&pb, &pa);
    let sa = winners_and_neutrals(&rest_a, &pb);
    let sb = winners_and_neutrals(&rest_b, &pa);
    let denom = common + sa + sb;
    if denom == 0 {
        // unreachable for nonempty inputs; kept for robustness
        return Ok(T::lit(0.5));
    }
    Ok((T::from_count(common) / T::lit(2.0) + T::from_count(sa)) / T::from_count(denom))
}

/// Fraction of the distinct members of `b` weakly dominated by some member
/// of `a`.
pub fn coverage<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<T> {
    a.check_same_m(b)?;
    let mut unique: Vec<&[T]> = Vec::with_capacity(b.len());
    for y in b.iter() {
        if !unique.contains(&y) {
            unique.push(y);
        }
    }
    if unique.is_empty() {
        return Err(Error::EmptySet("coverage"));
    }
    let covered = unique
        .iter()
        .filter(|&&y| a.iter().any(|x| weakly_dominates_vec(x, y)))
        .count();
    Ok(T::from_count(covered) / T::from_count(unique.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rows: &[&[f64]]) -> SolutionSet<f64> {
        SolutionSet::from_rows("S", rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn worked_pair() -> (SolutionSet<f64>, SolutionSet<f64>) {
        (
            set(&[&[2.0, 6.0], &[9.0, 2.0]]),
            set(&[&[1.0, 10.0], &[7.0, 5.0], &[12.0, 1.5]]),
        )
    }

    #[test]
    fn ci_worked_pair() {
        let (a, b) = worked_pair();
        assert_eq!(contribution(&a, &b).unwrap(), 0.4);
        assert_eq!(contribution(&b, &a).unwrap(), 0.6);
    }

    #[test]
    fn ci_self_is_half() {
        let (a, _) = worked_pair();
        assert_eq!(contribution(&a, &a).unwrap(), 0.5);
    }

    #[test]
    fn ci_of_dominated_set_is_zero() {
        let a = set(&[&[1.0, 1.0], &[0.0, 3.0]]);
        let b = set(&[&[2.0, 2.0], &[4.0, 4.0]]);
        assert_eq!(contribution(&b, &a).unwrap(), 0.0);
        assert_eq!(contribution(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn ci_with_partial_overlap_sums_to_one() {
        let a = set(&[&[1.0, 5.0], &[2.0, 2.0], &[2.0, 2.0]]);
        let b = set(&[&[2.0, 2.0], &[5.0, 1.0], &[3.0, 3.0]]);
        let s = contribution(&a, &b).unwrap() + contribution(&b, &a).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ci_against_empty_set() {
        let (a, _) = worked_pair();
        let e = SolutionSet::<f64>::empty("E", crate::default_meta(2)).unwrap();
        assert_eq!(contribution(&a, &e).unwrap(), 1.0);
        assert!(contribution(&e, &e).is_err());
    }

    #[test]
    fn coverage_examples() {
        let (a, b) = worked_pair();
        assert_eq!(coverage(&a, &b).unwrap(), 0.0);
        assert_eq!(coverage(&b, &a).unwrap(), 0.0);
        assert_eq!(coverage(&a, &a).unwrap(), 1.0);
        let good = set(&[&[0.0, 0.0]]);
        assert_eq!(coverage(&good, &a).unwrap(), 1.0);
        assert_eq!(coverage(&a, &good).unwrap(), 0.0);
    }

    #[test]
    fn coverage_deduplicates_b() {
        let a = set(&[&[1.0, 1.0]]);
        let b = set(&[&[2.0, 2.0], &[0.0, 3.0], &[0.0, 3.0], &[0.0, 3.0]]);
        assert_eq!(coverage(&a, &b).unwrap(), 0.5);
    }
}
