//! Objective vectors, per-objective metadata and named solution sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[default]
    Minimize,
    Maximize,
}

/// Describes one objective column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "T: Scalar"))]
pub struct ObjectiveMeta<T> {
    pub name: String,
    #[serde(default)]
    pub direction: Direction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hard_bounds: Option<(T, T)>,
    /// Set when the stored values were negated to turn a maximized
    /// objective into a minimized one.
    #[serde(skip)]
    pub negated: bool,
}

impl<T: Scalar> ObjectiveMeta<T> {
    pub fn minimize(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            direction: Direction::Minimize,
            units: None,
            hard_bounds: None,
            negated: false,
        }
    }

    pub fn maximize(name: impl Into<String>) -> Self {
        Self {
            direction: Direction::Maximize,
            ..Self::minimize(name)
        }
    }

    pub fn with_units(mut self, units: impl Into<String>) -> Self {
        self.units = Some(units.into());
        self
    }

    pub fn with_bounds(mut self, lower: T, upper: T) -> Self {
        self.hard_bounds = Some((lower, upper));
        self
    }

    // negated comparisons also reject NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if let Some((lo, hi)) = self.hard_bounds {
            if !(lo < hi) {
                return Err(Error::InvalidMeta {
                    name: self.name.clone(),
                    reason: format!("hard bounds require lower < upper, got ({lo}, {hi})"),
                });
            }
        }
        Ok(())
    }

    /// Direction the objective had before any orientation change.
    pub fn natural_direction(&self) -> Direction {
        if self.negated {
            Direction::Maximize
        } else {
            self.direction
        }
    }

    /// Converts a stored value to the objective's natural units.
    pub fn to_natural(&self, stored: T) -> T {
        if self.negated {
            -stored
        } else {
            stored
        }
    }

    /// Converts a value in natural units to the stored orientation.
    pub fn from_natural(&self, natural: T) -> T {
        self.to_natural(natural)
    }
}

/// One objective vector. Equality between solutions is exact equality of
/// the objective vectors; `id` and `source` never take part in it.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct Solution<T> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    /// Name of the set a solution was taken from, filled in when sets are merged.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    objectives: Vec<T>,
}

impl<T: Scalar> Solution<T> {
    pub fn new(objectives: Vec<T>) -> Result<Self> {
        if objectives.is_empty() {
            return Err(Error::NoObjectives);
        }
        if let Some((index, v)) = objectives.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite {
                index,
                value: v.as_f64(),
            });
        }
        Ok(Self {
            id: None,
            source: None,
            objectives,
        })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn objectives(&self) -> &[T] {
        &self.objectives
    }

    pub fn m(&self) -> usize {
        self.objectives.len()
    }

    /// Replaces the objective vector, keeping id and provenance.
    pub(crate) fn map_objectives(&self, objectives: Vec<T>) -> Self {
        Self {
            id: self.id.clone(),
            source: self.source.clone(),
            objectives,
        }
    }
}

impl<T: PartialEq> PartialEq for Solution<T> {
    fn eq(&self, other: &Self) -> bool {
        self.objectives == other.objectives
    }
}

/// A named collection of solutions sharing one objective layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct SolutionSet<T> {
    name: String,
    meta: Vec<ObjectiveMeta<T>>,
    solutions: Vec<Solution<T>>,
}

impl<T: Scalar> SolutionSet<T> {
    pub fn new(
        name: impl Into<String>,
        meta: Vec<ObjectiveMeta<T>>,
        solutions: Vec<Solution<T>>,
    ) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if meta.is_empty() {
            return Err(Error::NoObjectives);
        }
        for om in &meta {
            om.validate()?;
        }
        let m = meta.len();
        for s in &solutions {
            if s.m() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: s.m(),
                });
            }
        }
        Ok(Self {
            name,
            meta,
            solutions,
        })
    }

    pub fn empty(name: impl Into<String>, meta: Vec<ObjectiveMeta<T>>) -> Result<Self> {
        Self::new(name, meta, Vec::new())
    }

    /// Builds a set of minimized objectives named `f1..fm` from raw rows.
    pub fn from_rows(name: impl Into<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.first().map(Vec::len).ok_or(Error::EmptySet("from_rows"))?;
        Self::from_rows_with_meta(name, default_meta(m), rows)
    }

    pub fn from_rows_with_meta(
        name: impl Into<String>,
        meta: Vec<ObjectiveMeta<T>>,
        rows: Vec<Vec<T>>,
    ) -> Result<Self> {
        let solutions = rows
            .into_iter()
            .map(Solution::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, meta, solutions)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn meta(&self) -> &[ObjectiveMeta<T>] {
        &self.meta
    }

    pub fn solutions(&self) -> &[Solution<T>] {
        &self.solutions
    }

    pub fn m(&self) -> usize {
        self.meta.len()
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.solutions.iter().map(Solution::objectives)
    }

    pub fn points(&self) -> Vec<Vec<T>> {
        self.iter().map(<[T]>::to_vec).collect()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        let name = name.into();
        if !name.is_empty() {
            self.name = name;
        }
        self
    }

    /// Same name and metadata, different members. Members must already
    /// have the right dimension.
    pub(crate) fn with_solutions(&self, solutions: Vec<Solution<T>>) -> Self {
        debug_assert!(solutions.iter().all(|s| s.m() == self.m()));
        Self {
            name: self.name.clone(),
            meta: self.meta.clone(),
            solutions,
        }
    }

    pub(crate) fn with_meta(mut self, meta: Vec<ObjectiveMeta<T>>) -> Self {
        debug_assert_eq!(meta.len(), self.m());
        self.meta = meta;
        self
    }

    pub fn push(&mut self, solution: Solution<T>) -> Result<()> {
        if solution.m() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                found: solution.m(),
            });
        }
        self.solutions.push(solution);
        Ok(())
    }

    pub(crate) fn check_same_m(&self, other: &Self) -> Result<()> {
        if self.m() != other.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                found: other.m(),
            });
        }
        Ok(())
    }

    /// Keeps only the listed objective columns, in the given order.
    pub fn project(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::NoObjectives);
        }
        for &k in keep {
            if k >= self.m() {
                return Err(Error::ObjectiveOutOfRange {
                    index: k,
                    m: self.m(),
                });
            }
        }
        let meta = keep.iter().map(|&k| self.meta[k].clone()).collect();
        let solutions = self
            .solutions
            .iter()
            .map(|s| s.map_objectives(keep.iter().map(|&k| s.objectives()[k]).collect()))
            .collect();
        Ok(Self {
            name: self.name.clone(),
            meta,
            solutions,
        })
    }

    /// Objective vectors converted back to natural units.
    pub fn natural_points(&self) -> Vec<Vec<T>> {
        self.iter()
            .map(|p| {
                p.iter()
                    .zip(&self.meta)
                    .map(|(&v, om)| om.to_natural(v))
                    .collect()
            })
            .collect()
    }
}

/// `f1..fm`, all minimized.
pub fn default_meta<T: Scalar>(m: usize) -> Vec<ObjectiveMeta<T>> {
    (1..=m).map(|i| ObjectiveMeta::minimize(format!("f{i}"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_objectives() {
        assert!(matches!(
            Solution::new(vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(Solution::new(vec![f64::INFINITY]).is_err());
        assert_eq!(Solution::<f64>::new(vec![]), Err(Error::NoObjectives));
    }

    #[test]
    fn set_requires_consistent_dimension() {
        let err = SolutionSet::from_rows("A", vec![vec![1.0, 2.0], vec![1.0]]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
        assert_eq!(
            SolutionSet::<f64>::new("", default_meta(2), vec![]).unwrap_err(),
            Error::EmptyName
        );
    }

    #[test]
    fn hard_bounds_must_be_ordered() {
        let meta = vec![ObjectiveMeta::minimize("cost").with_bounds(5.0, 5.0)];
        assert!(matches!(
            SolutionSet::<f64>::empty("A", meta),
            Err(Error::InvalidMeta { .. })
        ));
    }

    #[test]
    fn equality_ignores_identifiers() {
        let a = Solution::new(vec![1.0, 2.0]).unwrap().with_id("x");
        let b = Solution::new(vec![1.0, 2.0]).unwrap().with_id("y");
        assert_eq!(a, b);
    }

    #[test]
    fn projection_keeps_selected_columns() {
        let s = SolutionSet::from_rows("A", vec![vec![1.0, 2.0, 3.0]]).unwrap();
        let p = s.project(&[2, 0]).unwrap();
        assert_eq!(p.points(), vec![vec![3.0, 1.0]]);
        assert_eq!(p.meta()[0].name, "f3");
        assert!(s.project(&[3]).is_err());
    }
}
