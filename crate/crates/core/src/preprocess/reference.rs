//! Reference sets and hypervolume reference points.

use serde::{Deserialize, Serialize};

use super::normalize::{extent, union_of};
use super::Flagged;
use crate::dominance::unique_nondominated_front;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::SolutionSet;

/// How the hypervolume reference point is derived from the data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case", bound(deserialize = "T: Scalar"))]
pub enum ReferencePointStrategy<T> {
    /// Componentwise worst value over every raw solution.
    WorstValues,
    /// `nadir + range / 10` of the combined front.
    #[default]
    NadirPlusTenth,
    /// `nadir + range / h`, `h` from [`compute_h`].
    NadirPlusLOverH,
    /// `nadir + range`, far enough out to reward extreme solutions.
    DoubledRange,
    Explicit(Vec<T>),
}

impl<T> ReferencePointStrategy<T> {
    pub fn label(&self) -> &'static str {
        match self {
            Self::WorstValues => "worst_values",
            Self::NadirPlusTenth => "nadir_plus_tenth",
            Self::NadirPlusLOverH => "nadir_plus_l_over_h",
            Self::DoubledRange => "doubled_range",
            Self::Explicit(_) => "explicit",
        }
    }
}

/// Unique nondominated front of the union of `sets`. Each member keeps the
/// name of the set it came from in [`crate::Solution::source`]; when a
/// vector occurs in several sets the first occurrence wins.
pub fn build_reference_set<T: Scalar>(sets: &[SolutionSet<T>]) -> Result<SolutionSet<T>> {
    let union = union_of(sets)?;
    if union.is_empty() {
        return Err(Error::EmptySet("build_reference_set"));
    }
    Ok(unique_nondominated_front(&union).with_name("reference"))
}

pub fn build_reference_point<T: Scalar>(
    basis: &SolutionSet<T>,
    strategy: &ReferencePointStrategy<T>,
) -> Result<Flagged<Vec<T>>> {
    if basis.is_empty() {
        return Err(Error::EmptySet("build_reference_point"));
    }
    let front = unique_nondominated_front(basis);
    let (ideal, nadir) = extent(&front).expect("front of a nonempty set is nonempty");
    let mut warnings = Vec::new();

    let offset_by = |divisor: Option<T>, warnings: &mut Vec<String>| -> Vec<T> {
        nadir
            .iter()
            .zip(&ideal)
            .enumerate()
            .map(|(i, (&n, &id))| {
                let l = n - id;
                if l == T::zero() {
                    warnings.push(format!(
                        "objective {i} has zero range on the front; reference set to nadir + 1"
                    ));
                    n + T::one()
                } else {
                    match divisor {
                        Some(d) => n + l / d,
                        None => n + l,
                    }
                }
            })
            .collect()
    };

    let point = match strategy {
        ReferencePointStrategy::WorstValues => extent(basis).expect("nonempty").1,
        ReferencePointStrategy::NadirPlusTenth => offset_by(Some(T::lit(10.0)), &mut warnings),
        ReferencePointStrategy::NadirPlusLOverH => {
            let h = compute_h(front.len(), basis.m());
            warnings.extend(h.warnings);
            offset_by(Some(T::from_count(h.value)), &mut warnings)
        }
        ReferencePointStrategy::DoubledRange => offset_by(None, &mut warnings),
        ReferencePointStrategy::Explicit(r) => {
            if r.len() != basis.m() {
                return Err(Error::DimensionMismatch {
                    expected: basis.m(),
                    found: r.len(),
                });
            }
            if r.iter().zip(&nadir).any(|(x, n)| x < n) {
                warnings.push(
                    "explicit reference point is better than the front's nadir on some objective; \
                     boundary solutions will contribute nothing there"
                        .into(),
                );
            }
            r.clone()
        }
    };
    Ok(Flagged::new(point, warnings))
}

/// Binomial coefficient, saturating at `u128::MAX`.
fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n - k + i) is always divisible by i
        acc = match acc.checked_mul(n as u128 - k as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// The `h` with `C(h+m-1, m-1) <= n < C(h+m, m-1)`.
///
/// Falls back to 1 (with a warning) when `n` is too small for any `h >= 1`,
/// or when `n < 1` or `m < 2`.
pub fn compute_h(n: usize, m: usize) -> Flagged<usize> {
    if n < 1 || m < 2 {
        return Flagged::new(1, vec![format!("h undefined for n={n}, m={m}; using h=1")]);
    }
    let (n128, k) = (n as u128, (m - 1) as u64);
    if binomial(m as u64, k) > n128 {
        return Flagged::new(
            1,
            vec![format!("n={n} is below C({m},{k}); no h >= 1 fits, using h=1")],
        );
    }
    let mut h = 1usize;
    while binomial((h + m) as u64, k) <= n128 {
        h += 1;
    }
    Flagged::new(h, Vec::new())
}
