use serde::{Deserialize, Serialize};

use super::Flagged;
use crate::dominance::unique_nondominated_front;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::{ObjectiveMeta, SolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsSource {
    CombinedFront,
    HardBounds,
    UserSupplied,
}

/// Per-objective ideal and nadir values in minimization orientation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizationBounds<T> {
    pub ideal: Vec<T>,
    pub nadir: Vec<T>,
    pub source: BoundsSource,
}

impl<T: Scalar> NormalizationBounds<T> {
    /// Extent of the unique nondominated front of the union of `sets`.
    pub fn combined_front(sets: &[SolutionSet<T>]) -> Result<Self> {
        let union = union_of(sets)?;
        let front = unique_nondominated_front(&union);
        let (ideal, nadir) = extent(&front).ok_or(Error::EmptySet("combined front bounds"))?;
        Ok(Self {
            ideal,
            nadir,
            source: BoundsSource::CombinedFront,
        })
    }

    /// Bounds declared in the objective metadata, oriented the same way as
    /// the stored values.
    pub fn from_hard_bounds(meta: &[ObjectiveMeta<T>]) -> Result<Self> {
        let mut ideal = Vec::with_capacity(meta.len());
        let mut nadir = Vec::with_capacity(meta.len());
        for om in meta {
            let (lo, hi) = om.hard_bounds.ok_or_else(|| Error::InvalidMeta {
                name: om.name.clone(),
                reason: "hard bounds requested but not declared".into(),
            })?;
            let (a, b) = (om.from_natural(lo), om.from_natural(hi));
            ideal.push(a.min(b));
            nadir.push(a.max(b));
        }
        Ok(Self {
            ideal,
            nadir,
            source: BoundsSource::HardBounds,
        })
    }

    pub fn user(ideal: Vec<T>, nadir: Vec<T>) -> Result<Self> {
        if ideal.len() != nadir.len() {
            return Err(Error::DimensionMismatch {
                expected: ideal.len(),
                found: nadir.len(),
            });
        }
        if ideal.iter().zip(&nadir).any(|(i, n)| i > n) {
            return Err(Error::InvalidConfig("ideal must not exceed nadir".into()));
        }
        Ok(Self {
            ideal,
            nadir,
            source: BoundsSource::UserSupplied,
        })
    }

    pub fn m(&self) -> usize {
        self.ideal.len()
    }

    pub fn is_degenerate(&self, objective: usize) -> bool {
        self.nadir[objective] == self.ideal[objective]
    }

    /// Maps one vector onto the unit box. A degenerate objective is shifted
    /// by its ideal with unit range, so the front maps to 0 and the order of
    /// values off the front survives.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        v.iter()
            .enumerate()
            .map(|(i, &x)| {
                let range = self.nadir[i] - self.ideal[i];
                if range == T::zero() {
                    x - self.ideal[i]
                } else {
                    (x - self.ideal[i]) / range
                }
            })
            .collect()
    }
}

pub(crate) fn union_of<T: Scalar>(sets: &[SolutionSet<T>]) -> Result<SolutionSet<T>> {
    let first = sets.first().ok_or(Error::EmptySet("union of no sets"))?;
    let mut union = first.with_solutions(Vec::new()).with_name("union");
    for s in sets {
        first.check_same_m(s)?;
        for sol in s.solutions() {
            let mut sol = sol.clone();
            if sol.source.is_none() {
                sol.source = Some(s.name().to_owned());
            }
            union.push(sol)?;
        }
    }
    Ok(union)
}

/// Componentwise (min, max); `None` for an empty set.
pub(crate) fn extent<T: Scalar>(a: &SolutionSet<T>) -> Option<(Vec<T>, Vec<T>)> {
    let mut it = a.iter();
    let first = it.next()?;
    let mut lo = first.to_vec();
    let mut hi = first.to_vec();
    for p in it {
        for (i, &v) in p.iter().enumerate() {
            lo[i] = lo[i].min(v);
            hi[i] = hi[i].max(v);
        }
    }
    Some((lo, hi))
}

/// Maps every value to `(v - ideal) / (nadir - ideal)`.
///
/// Values are not clamped. Those falling outside `[0, 1]` (possible with
/// hard or user bounds, or dominated points beyond the front's nadir) are
/// reported, as are degenerate objectives.
pub fn normalize<T: Scalar>(
    sets: &[SolutionSet<T>],
    bounds: &NormalizationBounds<T>,
) -> Result<Flagged<Vec<SolutionSet<T>>>> {
    let mut warnings = Vec::new();
    for i in (0..bounds.m()).filter(|&i| bounds.is_degenerate(i)) {
        warnings.push(format!(
            "objective {i} has no range (ideal = nadir = {}); shifted with unit range",
            bounds.ideal[i]
        ));
    }
    let mut out = Vec::with_capacity(sets.len());
    for s in sets {
        if s.m() != bounds.m() {
            return Err(Error::DimensionMismatch {
                expected: bounds.m(),
                found: s.m(),
            });
        }
        let mut outside = 0usize;
        let solutions = s
            .solutions()
            .iter()
            .map(|sol| {
                let v = bounds.apply(sol.objectives());
                outside += v.iter().filter(|&&x| x < T::zero() || x > T::one()).count();
                sol.map_objectives(v)
            })
            .collect();
        if outside > 0 {
            warnings.push(format!(
                "{outside} normalized value(s) of '{}' fall outside [0, 1]",
                s.name()
            ));
        }
        out.push(s.with_solutions(solutions));
    }
    Ok(Flagged::new(out, warnings))
}
