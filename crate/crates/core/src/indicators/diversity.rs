//! Spread, spacing and grid-based diversity.

use std::collections::HashSet;

use crate::dominance::unique_nondominated_front;
use crate::error::{Error, Result};
use crate::preprocess::NormalizationBounds;
use crate::scalar::{cmp, euclidean, Scalar};
use crate::solution::SolutionSet;

/// The two end points of a bi-objective front: best on the first objective
/// and best on the second, ties broken on the other objective.
pub fn front_extremes<T: Scalar>(r: &SolutionSet<T>) -> Result<(Vec<T>, Vec<T>)> {
    if r.m() != 2 {
        return Err(Error::BiObjectiveOnly {
            indicator: "Spread",
            m: r.m(),
        });
    }
    let lex = |i: usize, j: usize| {
        move |p: &&[T], q: &&[T]| cmp(&p[i], &q[i]).then(cmp(&p[j], &q[j]))
    };
    let first = r.iter().min_by(lex(0, 1)).ok_or(Error::EmptySet("front_extremes"))?;
    let second = r.iter().min_by(lex(1, 0)).expect("nonempty");
    Ok((first.to_vec(), second.to_vec()))
}

/// Spread (Δ) of the unique nondominated front of `a`.
///
/// `extremes` are the ends of the reference front, in either order. A
/// single-point set scores 1 if it misses an extreme and 0 otherwise.
pub fn spread_delta<T: Scalar>(a: &SolutionSet<T>, extremes: (&[T], &[T])) -> Result<T> {
    if a.m() != 2 {
        return Err(Error::BiObjectiveOnly {
            indicator: "Spread",
            m: a.m(),
        });
    }
    if extremes.0.len() != 2 || extremes.1.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: extremes.0.len().max(extremes.1.len()),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptySet("spread_delta"));
    }
    let front = unique_nondominated_front(a);
    let mut pts: Vec<&[T]> = front.iter().collect();
    pts.sort_by(|p, q| cmp(&p[0], &q[0]).then(cmp(&q[1], &p[1])));
    let (e_first, e_last) = if extremes.0[0] <= extremes.1[0] {
        extremes
    } else {
        (extremes.1, extremes.0)
    };
    let d_upper = euclidean(pts[0], e_first);
    let d_bottom = euclidean(pts[pts.len() - 1], e_last);
    let gaps: Vec<T> = pts.windows(2).map(|w| euclidean(w[0], w[1])).collect();
    let (mean, deviation) = if gaps.is_empty() {
        (T::zero(), T::zero())
    } else {
        let mean = gaps.iter().copied().sum::<T>() / T::from_count(gaps.len());
        (mean, gaps.iter().map(|&d| (d - mean).abs()).sum::<T>())
    };
    let denom = d_upper + d_bottom + T::from_count(gaps.len()) * mean;
    if denom == T::zero() {
        return Ok(T::zero());
    }
    Ok((d_upper + d_bottom + deviation) / denom)
}

/// Schott's spacing: sample standard deviation (divisor `n - 1`) of each
/// member's L1 distance to its nearest other member.
pub fn spacing<T: Scalar>(a: &SolutionSet<T>) -> Result<T> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooFewSolutions {
            indicator: "SP",
            needed: 2,
            found: n,
        });
    }
    let pts: Vec<&[T]> = a.iter().collect();
    let nn: Vec<T> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    pts[i]
                        .iter()
                        .zip(pts[j])
                        .map(|(&x, &y)| (x - y).abs())
                        .sum::<T>()
                })
                .fold(T::infinity(), T::min)
        })
        .collect();
    let mean = nn.iter().copied().sum::<T>() / T::from_count(n);
    let var = nn.iter().map(|&d| (d - mean) * (d - mean)).sum::<T>() / T::from_count(n - 1);
    Ok(var.sqrt())
}

fn cell_of<T: Scalar>(p: &[T], bounds: &NormalizationBounds<T>, divisions: usize) -> Vec<usize> {
    let top = divisions - 1;
    bounds
        .apply(p)
        .into_iter()
        .map(|u| {
            let k = (u * T::from_count(divisions)).floor();
            if k <= T::zero() {
                0
            } else {
                k.to_usize().unwrap_or(top).min(top)
            }
        })
        .collect()
}

/// For each set, the share of grid cells occupied by the union of all sets
/// that the set itself occupies.
///
/// The box spanned by `bounds` is cut into `divisions` equal slices per
/// objective. Points outside the box fall into the nearest boundary cell.
/// Sets that are all empty are an error; an empty set among nonempty ones
/// scores 0.
pub fn grid_diversity<T: Scalar>(
    sets: &[SolutionSet<T>],
    divisions: usize,
    bounds: &NormalizationBounds<T>,
) -> Result<Vec<T>> {
    if divisions < 2 {
        return Err(Error::InvalidConfig(format!(
            "grid_divisions must be at least 2, got {divisions}"
        )));
    }
    if sets.is_empty() {
        return Err(Error::EmptySet("grid_diversity"));
    }
    if let Some(i) = (0..bounds.m()).find(|&i| bounds.is_degenerate(i)) {
        return Err(Error::DegenerateBounds(i));
    }
    let occupied: Vec<HashSet<Vec<usize>>> = sets
        .iter()
        .map(|s| {
            if s.m() != bounds.m() {
                return Err(Error::DimensionMismatch {
                    expected: bounds.m(),
                    found: s.m(),
                });
            }
            Ok(s.iter().map(|p| cell_of(p, bounds, divisions)).collect())
        })
        .collect::<Result<_>>()?;
    let union: HashSet<&Vec<usize>> = occupied.iter().flatten().collect();
    if union.is_empty() {
        return Err(Error::EmptySet("grid_diversity"));
    }
    let total = T::from_count(union.len());
    Ok(occupied
        .iter()
        .map(|cells| T::from_count(cells.len()) / total)
        .collect())
}
