use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::{Direction, ObjectiveMeta, SolutionSet};

/// Threshold semantics of a clear constraint. Thresholds are expressed in
/// the objective's natural units and direction, whatever orientation the
/// data is stored in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", bound(deserialize = "T: Scalar"))]
pub enum ClearKind<T> {
    /// `value >= threshold`
    AtLeast(T),
    /// `value <= threshold`
    AtMost(T),
    /// `value > threshold`, used by screening rules such as "coverage > 0".
    GreaterThan(T),
    /// `value < threshold`
    LessThan(T),
    /// Only solutions attaining the best value are of interest. `best` pins
    /// the value (e.g. full coverage); when absent it is resolved from data.
    ExactlyBest {
        #[serde(default)]
        best: Option<T>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "T: Scalar"))]
pub struct ClearConstraint<T> {
    pub objective: usize,
    pub kind: ClearKind<T>,
}

impl<T: Scalar> ClearConstraint<T> {
    pub fn at_least(objective: usize, threshold: T) -> Self {
        Self {
            objective,
            kind: ClearKind::AtLeast(threshold),
        }
    }

    pub fn at_most(objective: usize, threshold: T) -> Self {
        Self {
            objective,
            kind: ClearKind::AtMost(threshold),
        }
    }

    pub fn greater_than(objective: usize, threshold: T) -> Self {
        Self {
            objective,
            kind: ClearKind::GreaterThan(threshold),
        }
    }

    pub fn less_than(objective: usize, threshold: T) -> Self {
        Self {
            objective,
            kind: ClearKind::LessThan(threshold),
        }
    }

    pub fn exactly_best(objective: usize, best: Option<T>) -> Self {
        Self {
            objective,
            kind: ClearKind::ExactlyBest { best },
        }
    }

    pub fn is_exactly_best(&self) -> bool {
        matches!(self.kind, ClearKind::ExactlyBest { .. })
    }

    /// Whether a natural-unit value satisfies the constraint. An unresolved
    /// `ExactlyBest` is evaluated against `resolved_best`.
    pub(crate) fn accepts(&self, natural: T, resolved_best: Option<T>) -> bool {
        match &self.kind {
            ClearKind::AtLeast(t) => natural >= *t,
            ClearKind::AtMost(t) => natural <= *t,
            ClearKind::GreaterThan(t) => natural > *t,
            ClearKind::LessThan(t) => natural < *t,
            ClearKind::ExactlyBest { best } => match best.or(resolved_best) {
                Some(b) => natural == b,
                None => false,
            },
        }
    }

    pub fn describe(&self, meta: &[ObjectiveMeta<T>]) -> String {
        let name = meta
            .get(self.objective)
            .map(|m| m.name.clone())
            .unwrap_or_else(|| format!("#{}", self.objective));
        match &self.kind {
            ClearKind::AtLeast(t) => format!("{name} >= {t}"),
            ClearKind::AtMost(t) => format!("{name} <= {t}"),
            ClearKind::GreaterThan(t) => format!("{name} > {t}"),
            ClearKind::LessThan(t) => format!("{name} < {t}"),
            ClearKind::ExactlyBest { best: Some(b) } => format!("{name} == {b} (best)"),
            ClearKind::ExactlyBest { best: None } => format!("{name} at its best value"),
        }
    }
}

/// Tolerance-bearing preference on one objective: improvements beyond
/// `saturation` count as equal, and solutions worse than `hard_floor` are
/// discarded. Both are natural units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "T: Scalar"))]
pub struct VagueClamp<T> {
    pub objective: usize,
    pub saturation: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hard_floor: Option<T>,
}

/// Region of the front the decision maker cares about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Roi {
    #[default]
    None,
    Knee,
    Extreme(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "T: Scalar"))]
pub struct PreferenceSpec<T> {
    /// Trivial-solution screening rules. They filter but never drop
    /// objectives.
    #[serde(default = "Vec::new")]
    pub screening: Vec<ClearConstraint<T>>,
    #[serde(default = "Vec::new")]
    pub clear: Vec<ClearConstraint<T>>,
    #[serde(default = "Vec::new")]
    pub vague: Vec<VagueClamp<T>>,
    #[serde(default)]
    pub roi: Roi,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<T>>,
    /// Qualitative preferences exist that cannot be turned into numbers.
    #[serde(default)]
    pub untransferable: bool,
}

impl<T: Scalar> Default for PreferenceSpec<T> {
    fn default() -> Self {
        Self {
            screening: Vec::new(),
            clear: Vec::new(),
            vague: Vec::new(),
            roi: Roi::None,
            weights: None,
            untransferable: false,
        }
    }
}

const WEIGHT_SUM_TOL: f64 = 1e-9;

impl<T: Scalar> PreferenceSpec<T> {
    /// No usable preference information. Screening rules and the
    /// untransferable flag do not count.
    pub fn is_empty(&self) -> bool {
        self.clear.is_empty() && self.vague.is_empty() && self.roi == Roi::None && self.weights.is_none()
    }

    pub fn validate(&self, meta: &[ObjectiveMeta<T>]) -> Result<()> {
        let m = meta.len();
        let in_range = |index: usize| {
            if index < m {
                Ok(())
            } else {
                Err(Error::ObjectiveOutOfRange { index, m })
            }
        };
        for c in self.screening.iter().chain(&self.clear) {
            in_range(c.objective)?;
        }
        let mut seen = vec![false; m];
        for c in &self.clear {
            if std::mem::replace(&mut seen[c.objective], true) {
                return Err(Error::InvalidPreferences(format!(
                    "more than one clear constraint on objective {}",
                    c.objective
                )));
            }
        }
        let mut seen = vec![false; m];
        for v in &self.vague {
            in_range(v.objective)?;
            if std::mem::replace(&mut seen[v.objective], true) {
                return Err(Error::InvalidPreferences(format!(
                    "more than one vague clamp on objective {}",
                    v.objective
                )));
            }
            if let Some(floor) = v.hard_floor {
                let ordered = match meta[v.objective].natural_direction() {
                    Direction::Maximize => floor < v.saturation,
                    Direction::Minimize => floor > v.saturation,
                };
                if !ordered {
                    return Err(Error::InvalidPreferences(format!(
                        "hard floor {floor} must be worse than saturation {} on '{}'",
                        v.saturation, meta[v.objective].name
                    )));
                }
            }
        }
        if let Roi::Extreme(idx) = &self.roi {
            if idx.is_empty() {
                return Err(Error::InvalidPreferences(
                    "extreme region of interest names no objective".into(),
                ));
            }
            for &i in idx {
                in_range(i)?;
            }
        }
        if let Some(w) = &self.weights {
            validate_weights(w, m)?;
        }
        self.check_consistency(meta)
    }

    fn check_consistency(&self, meta: &[ObjectiveMeta<T>]) -> Result<()> {
        for v in &self.vague {
            let Some(c) = self.clear.iter().find(|c| c.objective == v.objective) else {
                continue;
            };
            let om = &meta[v.objective];
            let maximize = om.natural_direction() == Direction::Maximize;
            // `better(x, y)`: x is strictly preferable to y in natural terms.
            let better = |x: T, y: T| if maximize { x > y } else { x < y };
            let conflict = match &c.kind {
                ClearKind::ExactlyBest { .. } => true,
                ClearKind::AtLeast(t) | ClearKind::GreaterThan(t) if maximize => better(*t, v.saturation),
                ClearKind::AtMost(t) | ClearKind::LessThan(t) if !maximize => better(*t, v.saturation),
                ClearKind::AtMost(t) | ClearKind::LessThan(t) => {
                    v.hard_floor.is_some_and(|f| better(f, *t))
                }
                ClearKind::AtLeast(t) | ClearKind::GreaterThan(t) => {
                    v.hard_floor.is_some_and(|f| better(f, *t))
                }
            };
            if conflict {
                return Err(Error::InconsistentPreferences(format!(
                    "vague clamp on '{}' contradicts clear constraint {}",
                    om.name,
                    c.describe(meta)
                )));
            }
        }
        Ok(())
    }

    /// Pins every unresolved `ExactlyBest` to the best natural value found
    /// across `sets`, so that all sets are filtered against one target.
    pub fn resolve_best(&self, sets: &[SolutionSet<T>]) -> Self {
        let mut out = self.clone();
        for c in out.clear.iter_mut().chain(out.screening.iter_mut()) {
            if let ClearKind::ExactlyBest { best: best @ None } = &mut c.kind {
                *best = best_natural(sets, c.objective);
            }
        }
        out
    }

    pub fn exactly_best_objectives(&self) -> Vec<usize> {
        self.clear
            .iter()
            .filter(|c| c.is_exactly_best())
            .map(|c| c.objective)
            .collect()
    }
}

pub(crate) fn validate_weights<T: Scalar>(w: &[T], m: usize) -> Result<()> {
    if w.len() != m {
        return Err(Error::InvalidWeights(format!(
            "expected {m} weights, found {}",
            w.len()
        )));
    }
    if w.iter().any(|x| !x.is_finite() || *x < T::zero()) {
        return Err(Error::InvalidWeights("weights must be finite and nonnegative".into()));
    }
    let sum: T = w.iter().copied().sum();
    if (sum.as_f64() - 1.0).abs() > WEIGHT_SUM_TOL {
        return Err(Error::InvalidWeights(format!("weights sum to {sum}, not 1")));
    }
    Ok(())
}

/// Best natural value of one objective over all members of `sets`.
pub(crate) fn best_natural<T: Scalar>(sets: &[SolutionSet<T>], objective: usize) -> Option<T> {
    let mut best: Option<T> = None;
    for s in sets {
        let Some(om) = s.meta().get(objective) else {
            continue;
        };
        let maximize = om.natural_direction() == Direction::Maximize;
        for p in s.iter() {
            let v = om.to_natural(p[objective]);
            best = Some(match best {
                None => v,
                Some(b) if maximize => b.max(v),
                Some(b) => b.min(v),
            });
        }
    }
    best
}
