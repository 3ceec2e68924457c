//! Solution- and set-level Pareto relations.
//!
//! Every function here assumes minimization on all objectives; sets with
//! maximized objectives go through [`crate::preprocess::to_minimization`]
//! first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::{Solution, SolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominanceOutcome {
    FirstDominates,
    SecondDominates,
    Incomparable,
    Equal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetRelation {
    FirstBetter,
    SecondBetter,
    Incomparable,
    Equivalent,
}

impl SetRelation {
    pub fn flipped(self) -> Self {
        match self {
            Self::FirstBetter => Self::SecondBetter,
            Self::SecondBetter => Self::FirstBetter,
            other => other,
        }
    }
}

// Unchecked vector forms, shared with the indicator code.

pub(crate) fn weakly_dominates_vec<T: Scalar>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn dominates_vec<T: Scalar>(a: &[T], b: &[T]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

fn check_pair<T: Scalar>(a: &Solution<T>, b: &Solution<T>) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::DimensionMismatch {
            expected: a.m(),
            found: b.m(),
        });
    }
    Ok(())
}

/// `a_i <= b_i` on every objective.
pub fn weakly_dominates<T: Scalar>(a: &Solution<T>, b: &Solution<T>) -> Result<bool> {
    check_pair(a, b)?;
    Ok(weakly_dominates_vec(a.objectives(), b.objectives()))
}

/// Weak dominance plus strict improvement on at least one objective.
pub fn dominates<T: Scalar>(a: &Solution<T>, b: &Solution<T>) -> Result<bool> {
    check_pair(a, b)?;
    Ok(dominates_vec(a.objectives(), b.objectives()))
}

pub fn compare<T: Scalar>(a: &Solution<T>, b: &Solution<T>) -> Result<DominanceOutcome> {
    check_pair(a, b)?;
    let (a, b) = (a.objectives(), b.objectives());
    Ok(if a == b {
        DominanceOutcome::Equal
    } else if dominates_vec(a, b) {
        DominanceOutcome::FirstDominates
    } else if dominates_vec(b, a) {
        DominanceOutcome::SecondDominates
    } else {
        DominanceOutcome::Incomparable
    })
}

fn covers<T: Scalar>(
    a: &SolutionSet<T>,
    b: &SolutionSet<T>,
    rel: fn(&[T], &[T]) -> bool,
    op: &'static str,
) -> Result<bool> {
    a.check_same_m(b)?;
    if b.is_empty() {
        return Err(Error::EmptySet(op));
    }
    Ok(b.iter().all(|y| a.iter().any(|x| rel(x, y))))
}

/// Every member of `b` is dominated by some member of `a`.
pub fn set_dominates<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<bool> {
    covers(a, b, dominates_vec, "set_dominates")
}

/// Every member of `b` is weakly dominated by some member of `a`.
pub fn set_weakly_dominates<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<bool> {
    covers(a, b, weakly_dominates_vec, "set_weakly_dominates")
}

/// The better relation: `a` weakly covers `b`, and some member of `a` is
/// not weakly dominated by any member of `b`.
pub fn better_relation<T: Scalar>(a: &SolutionSet<T>, b: &SolutionSet<T>) -> Result<SetRelation> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("better_relation"));
    }
    let ab = set_weakly_dominates(a, b)?;
    let ba = set_weakly_dominates(b, a)?;
    Ok(match (ab, ba) {
        (true, true) => SetRelation::Equivalent,
        (true, false) => SetRelation::FirstBetter,
        (false, true) => SetRelation::SecondBetter,
        (false, false) => SetRelation::Incomparable,
    })
}

/// Indices of members not dominated by any other member, in input order.
pub(crate) fn nondominated_indices<T: Scalar>(points: &[&[T]]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| !points.iter().any(|q| dominates_vec(q, points[i])))
        .collect()
}

/// Members not dominated by any other member. Duplicates are kept and the
/// input order is preserved.
pub fn nondominated_front<T: Scalar>(a: &SolutionSet<T>) -> SolutionSet<T> {
    let pts: Vec<&[T]> = a.iter().collect();
    let keep = nondominated_indices(&pts);
    a.with_solutions(keep.into_iter().map(|i| a.solutions()[i].clone()).collect())
}

/// The nondominated front with exact duplicates collapsed onto their first
/// occurrence.
pub fn unique_nondominated_front<T: Scalar>(a: &SolutionSet<T>) -> SolutionSet<T> {
    let front = nondominated_front(a);
    let mut out: Vec<Solution<T>> = Vec::with_capacity(front.len());
    for s in front.solutions() {
        if !out.iter().any(|u| u == s) {
            out.push(s.clone());
        }
    }
    a.with_solutions(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(v: &[f64]) -> Solution<f64> {
        Solution::new(v.to_vec()).unwrap()
    }

    fn set(name: &str, rows: &[&[f64]]) -> SolutionSet<f64> {
        SolutionSet::from_rows(name, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn worked_pair() -> (SolutionSet<f64>, SolutionSet<f64>) {
        (
            set("A", &[&[2.0, 6.0], &[9.0, 2.0]]),
            set("B", &[&[1.0, 10.0], &[7.0, 5.0], &[12.0, 1.5]]),
        )
    }

    fn cost_coverage() -> (SolutionSet<f64>, SolutionSet<f64>) {
        // coverage negated so both columns are minimized
        (
            set(
                "A",
                &[&[200.0, -0.2], &[350.0, -0.4], &[400.0, -0.6], &[450.0, -1.0]],
            ),
            set(
                "B",
                &[
                    &[0.0, 0.0],
                    &[100.0, -0.4],
                    &[200.0, -0.7],
                    &[350.0, -0.9],
                    &[500.0, -1.0],
                ],
            ),
        )
    }

    #[test]
    fn weak_dominance_examples() {
        assert!(weakly_dominates(&sol(&[1.0, 2.0]), &sol(&[1.0, 2.0])).unwrap());
        assert!(!weakly_dominates(&sol(&[2.0, 6.0]), &sol(&[7.0, 5.0])).unwrap());
        assert!(weakly_dominates(&sol(&[1.0, 4.0]), &sol(&[2.0, 5.0])).unwrap());
    }

    #[test]
    fn dominance_examples() {
        assert!(!dominates(&sol(&[1.0, 2.0]), &sol(&[1.0, 2.0])).unwrap());
        assert!(dominates(&sol(&[2.0, 5.0]), &sol(&[3.0, 9.0])).unwrap());
        assert!(dominates(&sol(&[1.0, 3.0]), &sol(&[3.0, 3.0])).unwrap());
    }

    #[test]
    fn compare_examples() {
        use DominanceOutcome::*;
        assert_eq!(compare(&sol(&[2.0, 6.0]), &sol(&[9.0, 2.0])).unwrap(), Incomparable);
        assert_eq!(compare(&sol(&[5.0, 5.0]), &sol(&[5.0, 5.0])).unwrap(), Equal);
        assert_eq!(compare(&sol(&[1.0, 1.0]), &sol(&[2.0, 2.0])).unwrap(), FirstDominates);
        assert_eq!(compare(&sol(&[2.0, 2.0]), &sol(&[1.0, 1.0])).unwrap(), SecondDominates);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = dominates(&sol(&[1.0]), &sol(&[1.0, 2.0])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, found: 2 });
        assert!(set_dominates(&set("A", &[&[1.0]]), &set("B", &[&[1.0, 2.0]])).is_err());
    }

    #[test]
    fn set_dominance_examples() {
        let a = set("A", &[&[2.0, 2.0], &[3.0, 3.0]]);
        let b = set("B", &[&[4.0, 4.0], &[5.0, 5.0]]);
        assert!(set_dominates(&a, &b).unwrap());
        let (a4, b4) = worked_pair();
        assert!(!set_dominates(&a4, &b4).unwrap());
        let one = set("A", &[&[1.0, 1.0]]);
        assert!(!set_dominates(&one, &one).unwrap());
    }

    #[test]
    fn set_weak_dominance_examples() {
        let one = set("A", &[&[1.0, 1.0]]);
        assert!(set_weakly_dominates(&one, &one).unwrap());
        let a = set("A", &[&[2.0, 2.0]]);
        let b = set("B", &[&[3.0, 3.0], &[2.0, 2.0]]);
        assert!(set_weakly_dominates(&a, &b).unwrap());
        let (a4, b4) = worked_pair();
        assert!(!set_weakly_dominates(&a4, &b4).unwrap());
    }

    #[test]
    fn empty_sets_are_rejected() {
        let a = set("A", &[&[1.0, 1.0]]);
        let e = SolutionSet::<f64>::empty("E", crate::solution::default_meta(2)).unwrap();
        assert!(matches!(set_dominates(&a, &e), Err(Error::EmptySet(_))));
        assert!(matches!(set_weakly_dominates(&a, &e), Err(Error::EmptySet(_))));
        assert!(matches!(better_relation(&e, &a), Err(Error::EmptySet(_))));
        assert!(!set_dominates(&e, &a).unwrap());
    }

    #[test]
    fn better_relation_examples() {
        let a = set("A", &[&[1.0, 1.0]]);
        let b = set("B", &[&[2.0, 2.0]]);
        assert_eq!(better_relation(&a, &b).unwrap(), SetRelation::FirstBetter);
        assert_eq!(better_relation(&b, &a).unwrap(), SetRelation::SecondBetter);
        assert_eq!(better_relation(&a, &a).unwrap(), SetRelation::Equivalent);
        let (a3, b3) = cost_coverage();
        assert_eq!(better_relation(&a3, &b3).unwrap(), SetRelation::Incomparable);
    }

    #[test]
    fn front_examples() {
        let (_, b3) = cost_coverage();
        assert_eq!(nondominated_front(&b3).len(), 5);
        let s = set("S", &[&[1.0, 1.0], &[2.0, 2.0]]);
        assert_eq!(nondominated_front(&s).points(), vec![vec![1.0, 1.0]]);
        let d = set("D", &[&[1.0, 2.0], &[1.0, 2.0]]);
        assert_eq!(nondominated_front(&d).len(), 2);
    }

    #[test]
    fn unique_front_examples() {
        let s = set("S", &[&[1.0, 2.0], &[1.0, 2.0], &[0.0, 3.0]]);
        assert_eq!(
            unique_nondominated_front(&s).points(),
            vec![vec![1.0, 2.0], vec![0.0, 3.0]]
        );
        let (a4, _) = worked_pair();
        assert_eq!(unique_nondominated_front(&a4).points(), a4.points());
        let s = set("S", &[&[2.0, 2.0], &[1.0, 1.0]]);
        assert_eq!(unique_nondominated_front(&s).points(), vec![vec![1.0, 1.0]]);
    }
}
