//! Orientation change, trivial-solution screening and the transfer of clear
//! and vague preferences into the solution sets themselves.

use serde::{Deserialize, Serialize};

use super::prefs::{best_natural, ClearConstraint, PreferenceSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solution::{Direction, Solution, SolutionSet};

/// Negates every maximized objective so the whole set is minimized. The
/// change is recorded in the metadata; [`restore_orientation`] undoes it.
pub fn to_minimization<T: Scalar>(a: &SolutionSet<T>) -> SolutionSet<T> {
    let flip: Vec<bool> = a.meta().iter().map(|m| m.direction == Direction::Maximize).collect();
    if !flip.contains(&true) {
        return a.clone();
    }
    let meta = a
        .meta()
        .iter()
        .zip(&flip)
        .map(|(m, &f)| {
            let mut m = m.clone();
            if f {
                m.direction = Direction::Minimize;
                m.negated = !m.negated;
            }
            m
        })
        .collect();
    let solutions = a
        .solutions()
        .iter()
        .map(|s| {
            s.map_objectives(
                s.objectives()
                    .iter()
                    .zip(&flip)
                    .map(|(&v, &f)| if f { -v } else { v })
                    .collect(),
            )
        })
        .collect();
    a.with_solutions(solutions).with_meta(meta)
}

/// Inverse of [`to_minimization`].
pub fn restore_orientation<T: Scalar>(a: &SolutionSet<T>) -> SolutionSet<T> {
    let flip: Vec<bool> = a.meta().iter().map(|m| m.negated).collect();
    if !flip.contains(&true) {
        return a.clone();
    }
    let meta = a
        .meta()
        .iter()
        .map(|m| {
            let mut m = m.clone();
            if m.negated {
                m.negated = false;
                m.direction = Direction::Maximize;
            }
            m
        })
        .collect();
    let solutions = a
        .solutions()
        .iter()
        .map(|s| {
            s.map_objectives(
                s.objectives()
                    .iter()
                    .zip(&flip)
                    .map(|(&v, &f)| if f { -v } else { v })
                    .collect(),
            )
        })
        .collect();
    a.with_solutions(solutions).with_meta(meta)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct Removal<T> {
    pub solution: Solution<T>,
    /// Human-readable form of the violated rule.
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilterOutcome<T> {
    pub set: SolutionSet<T>,
    pub removed: Vec<Removal<T>>,
    /// Objectives on which every survivor is equal after an exact-best
    /// transfer; downstream evaluation ignores them.
    pub dropped_objectives: Vec<usize>,
    pub warnings: Vec<String>,
}

fn filter<T: Scalar>(a: &SolutionSet<T>, rules: &[ClearConstraint<T>]) -> Result<FilterOutcome<T>> {
    for r in rules {
        if r.objective >= a.m() {
            return Err(Error::ObjectiveOutOfRange {
                index: r.objective,
                m: a.m(),
            });
        }
    }
    let resolved: Vec<Option<T>> = rules
        .iter()
        .map(|r| best_natural(std::slice::from_ref(a), r.objective))
        .collect();
    let mut kept = Vec::with_capacity(a.len());
    let mut removed = Vec::new();
    for s in a.solutions() {
        let violated = rules.iter().zip(&resolved).find(|(r, best)| {
            let om = &a.meta()[r.objective];
            !r.accepts(om.to_natural(s.objectives()[r.objective]), **best)
        });
        match violated {
            Some((r, _)) => removed.push(Removal {
                solution: s.clone(),
                rule: r.describe(a.meta()),
            }),
            None => kept.push(s.clone()),
        }
    }
    let mut warnings = Vec::new();
    if kept.is_empty() && !a.is_empty() {
        warnings.push(format!("every solution of '{}' was removed", a.name()));
    }
    Ok(FilterOutcome {
        set: a.with_solutions(kept),
        removed,
        dropped_objectives: Vec::new(),
        warnings,
    })
}

/// Removes solutions that violate any screening rule.
pub fn screen_trivial<T: Scalar>(
    a: &SolutionSet<T>,
    rules: &[ClearConstraint<T>],
) -> Result<FilterOutcome<T>> {
    filter(a, rules)
}

/// Removes solutions failing any clear constraint. Objectives constrained
/// to their exact best value are reported as dropped once the survivors all
/// share that value.
pub fn apply_clear_preferences<T: Scalar>(
    a: &SolutionSet<T>,
    spec: &PreferenceSpec<T>,
) -> Result<FilterOutcome<T>> {
    let mut out = filter(a, &spec.clear)?;
    if out.set.is_empty() {
        return Ok(out);
    }
    for c in spec.clear.iter().filter(|c| c.is_exactly_best()) {
        let first = out.set.solutions()[0].objectives()[c.objective];
        if out.set.iter().all(|p| p[c.objective] == first) {
            out.dropped_objectives.push(c.objective);
        }
    }
    out.dropped_objectives.sort_unstable();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClampOutcome<T> {
    pub set: SolutionSet<T>,
    pub discarded: Vec<Removal<T>>,
    /// Number of individual values moved onto a saturation level.
    pub clamped_values: usize,
}

/// Applies every vague clamp: values better than the saturation level are
/// set to it, solutions worse than the hard floor are discarded.
pub fn apply_vague_preferences<T: Scalar>(
    a: &SolutionSet<T>,
    spec: &PreferenceSpec<T>,
) -> Result<ClampOutcome<T>> {
    for v in &spec.vague {
        if v.objective >= a.m() {
            return Err(Error::ObjectiveOutOfRange {
                index: v.objective,
                m: a.m(),
            });
        }
    }
    let mut kept = Vec::with_capacity(a.len());
    let mut discarded = Vec::new();
    let mut clamped_values = 0;
    'solutions: for s in a.solutions() {
        let mut values = s.objectives().to_vec();
        for v in &spec.vague {
            let om = &a.meta()[v.objective];
            let maximize = om.natural_direction() == Direction::Maximize;
            let natural = om.to_natural(values[v.objective]);
            if let Some(floor) = v.hard_floor {
                let below = if maximize { natural < floor } else { natural > floor };
                if below {
                    discarded.push(Removal {
                        solution: s.clone(),
                        rule: format!("{} worse than hard floor {floor}", om.name),
                    });
                    continue 'solutions;
                }
            }
            let beyond = if maximize {
                natural > v.saturation
            } else {
                natural < v.saturation
            };
            if beyond {
                values[v.objective] = om.from_natural(v.saturation);
                clamped_values += 1;
            }
        }
        kept.push(s.map_objectives(values));
    }
    Ok(ClampOutcome {
        set: a.with_solutions(kept),
        discarded,
        clamped_values,
    })
}
