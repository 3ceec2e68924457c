//! Descriptive objective statistics, cross-run summaries and selection of a
//! representative run.

use serde::{Deserialize, Serialize};

use crate::dominance::set_dominates;
use crate::error::{Error, Result};
use crate::indicators::{EvaluationContext, IndicatorConfig, IndicatorName};
use crate::preprocess::validate_weights;
use crate::scalar::{cmp, Scalar};
use crate::solution::{ObjectiveMeta, Solution, SolutionSet};

/// Repeated runs of one algorithm on one problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct RunCollection<T> {
    algorithm: String,
    runs: Vec<SolutionSet<T>>,
}

impl<T: Scalar> RunCollection<T> {
    pub fn new(algorithm: impl Into<String>, runs: Vec<SolutionSet<T>>) -> Result<Self> {
        let first = runs.first().ok_or(Error::EmptySet("run collection"))?;
        for r in &runs[1..] {
            first.check_same_m(r)?;
        }
        Ok(Self {
            algorithm: algorithm.into(),
            runs,
        })
    }

    pub fn algorithm(&self) -> &str {
        &self.algorithm
    }

    pub fn runs(&self) -> &[SolutionSet<T>] {
        &self.runs
    }

    pub fn meta(&self) -> &[ObjectiveMeta<T>] {
        self.runs[0].meta()
    }

    pub fn m(&self) -> usize {
        self.runs[0].m()
    }
}

/// Per-objective statistics in natural units. `best` and `worst` follow
/// each objective's natural direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct ObjectiveStats<T> {
    pub names: Vec<String>,
    pub mean: Vec<T>,
    pub median: Vec<T>,
    pub best: Vec<T>,
    pub worst: Vec<T>,
}

/// Midpoint median of an already sorted, nonempty slice.
fn midpoint_median<T: Scalar>(sorted: &[T]) -> T {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / T::lit(2.0)
    }
}

pub fn per_objective_stats<T: Scalar>(a: &SolutionSet<T>) -> Result<ObjectiveStats<T>> {
    if a.is_empty() {
        return Err(Error::EmptySet("per_objective_stats"));
    }
    let n = T::from_count(a.len());
    let mut stats = ObjectiveStats {
        names: a.meta().iter().map(|om| om.name.clone()).collect(),
        mean: Vec::with_capacity(a.m()),
        median: Vec::with_capacity(a.m()),
        best: Vec::with_capacity(a.m()),
        worst: Vec::with_capacity(a.m()),
    };
    for (j, om) in a.meta().iter().enumerate() {
        // stored orientation is minimization, so sorted[0] is the best value
        let mut col: Vec<T> = a.iter().map(|p| p[j]).collect();
        col.sort_by(cmp);
        stats.mean.push(om.to_natural(col.iter().copied().sum::<T>() / n));
        stats.median.push(om.to_natural(midpoint_median(&col)));
        stats.best.push(om.to_natural(col[0]));
        stats.worst.push(om.to_natural(col[col.len() - 1]));
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DoeStat {
    Mean,
    Median,
    Best,
    Worst,
}

impl DoeStat {
    fn pick<T: Scalar>(self, s: &ObjectiveStats<T>) -> &[T] {
        match self {
            Self::Mean => &s.mean,
            Self::Median => &s.median,
            Self::Best => &s.best,
            Self::Worst => &s.worst,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    First,
    Second,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoeComparison {
    pub stat: DoeStat,
    pub winners: Vec<Winner>,
    pub first_dominates: bool,
    pub second_dominates: bool,
    /// The statistic favours, on some objective, a set that is dominated by
    /// the other.
    pub misleading: bool,
}

/// Per-objective verdict of a descriptive statistic, checked against set
/// dominance.
pub fn doe_compare<T: Scalar>(
    a: &SolutionSet<T>,
    b: &SolutionSet<T>,
    stat: DoeStat,
) -> Result<DoeComparison> {
    a.check_same_m(b)?;
    let (sa, sb) = (per_objective_stats(a)?, per_objective_stats(b)?);
    let winners: Vec<Winner> = a
        .meta()
        .iter()
        .zip(stat.pick(&sa).iter().zip(stat.pick(&sb)))
        .map(|(om, (&x, &y))| {
            // compare in stored (minimized) orientation
            let (x, y) = (om.from_natural(x), om.from_natural(y));
            if x < y {
                Winner::First
            } else if y < x {
                Winner::Second
            } else {
                Winner::Tie
            }
        })
        .collect();
    let first_dominates = set_dominates(a, b)?;
    let second_dominates = set_dominates(b, a)?;
    let misleading = (first_dominates && winners.contains(&Winner::Second))
        || (second_dominates && winners.contains(&Winner::First));
    Ok(DoeComparison {
        stat,
        winners,
        first_dominates,
        second_dominates,
        misleading,
    })
}

/// Member minimizing `sum w_i f_i`, with its score. Ties go to the first
/// member in input order. Values are expected to be normalized.
pub fn scalarize_best<T: Scalar>(a: &SolutionSet<T>, weights: &[T]) -> Result<(Solution<T>, T)> {
    validate_weights(weights, a.m())?;
    let mut best: Option<(usize, T)> = None;
    for (i, p) in a.iter().enumerate() {
        let score: T = p.iter().zip(weights).map(|(&f, &w)| f * w).sum();
        if best.is_none_or(|(_, s)| score < s) {
            best = Some((i, score));
        }
    }
    let (i, score) = best.ok_or(Error::EmptySet("scalarize_best"))?;
    Ok((a.solutions()[i].clone(), score))
}

/// Index of the value nearest the median, using the lower-middle value for
/// even counts so the result is always a real run. Ties go to the first
/// index.
pub fn representative_index<T: Scalar>(values: &[T]) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::EmptySet("representative_index"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(cmp);
    let median = sorted[(sorted.len() - 1) / 2];
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if (*v - median).abs() < (values[best] - median).abs() {
            best = i;
        }
    }
    Ok(best)
}

/// Run whose indicator value is closest to the median over all runs. The
/// reference data is derived from the runs themselves.
pub fn select_representative_run<T: Scalar>(
    rc: &RunCollection<T>,
    indicator: IndicatorName,
    config: &IndicatorConfig<T>,
) -> Result<usize> {
    if !indicator.is_unary() {
        return Err(Error::NotUnary(indicator.to_string()));
    }
    let ctx = EvaluationContext::build(rc.runs(), config)?;
    let values = rc
        .runs()
        .iter()
        .map(|r| ctx.evaluate(indicator, r).map(|v| v.value))
        .collect::<Result<Vec<T>>>()?;
    representative_index(&values)
}

/// Mean, midpoint median and extremes of per-run values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct RunSummary<T> {
    pub runs: usize,
    pub mean: T,
    pub median: T,
    pub min: T,
    pub max: T,
}

pub fn summarize<T: Scalar>(values: &[T]) -> Result<RunSummary<T>> {
    if values.is_empty() {
        return Err(Error::EmptySet("summarize"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(cmp);
    Ok(RunSummary {
        runs: values.len(),
        mean: values.iter().copied().sum::<T>() / T::from_count(values.len()),
        median: midpoint_median(&sorted),
        min: sorted[0],
        max: sorted[sorted.len() - 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::NormalizationMode;
    use crate::preprocess::{to_minimization, ReferencePointStrategy};

    fn set(name: &str, rows: &[&[f64]]) -> SolutionSet<f64> {
        SolutionSet::from_rows(name, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn stat_pair() -> (SolutionSet<f64>, SolutionSet<f64>) {
        (
            set("A", &[&[1.0, 1.0], &[5.0, 9.0], &[9.0, 5.0]]),
            set("B", &[&[2.0, 6.0], &[6.0, 2.0], &[4.0, 4.0]]),
        )
    }

    #[test]
    fn simple_stats() {
        let s = per_objective_stats(&set("S", &[&[1.0, 4.0], &[3.0, 2.0]])).unwrap();
        assert_eq!(s.mean, vec![2.0, 3.0]);
        assert_eq!(s.best, vec![1.0, 2.0]);
        assert_eq!(s.worst, vec![3.0, 4.0]);
        let one = per_objective_stats(&set("S", &[&[7.0, 8.0]])).unwrap();
        assert_eq!(one.mean, one.median);
        assert_eq!(one.best, one.worst);
        assert_eq!(one.best, vec![7.0, 8.0]);
    }

    #[test]
    fn stats_in_natural_units() {
        let meta = vec![ObjectiveMeta::minimize("cost"), ObjectiveMeta::maximize("users")];
        let s = SolutionSet::from_rows_with_meta("S", meta, vec![vec![1.0, 10.0], vec![2.0, 30.0]])
            .unwrap();
        let st = per_objective_stats(&to_minimization(&s)).unwrap();
        assert_eq!(st.best, vec![1.0, 30.0]);
        assert_eq!(st.worst, vec![2.0, 10.0]);
        assert_eq!(st.mean, vec![1.5, 20.0]);
    }

    #[test]
    fn stat_pair_mean_is_misleading() {
        let (a, b) = stat_pair();
        let c = doe_compare(&a, &b, DoeStat::Mean).unwrap();
        assert!(c.first_dominates);
        assert_eq!(c.winners, vec![Winner::Second, Winner::Second]);
        assert!(c.misleading);
        let best = doe_compare(&a, &b, DoeStat::Best).unwrap();
        assert!(!best.misleading);
    }

    #[test]
    fn identical_sets_tie() {
        let (a, _) = stat_pair();
        let c = doe_compare(&a, &a, DoeStat::Median).unwrap();
        assert!(c.winners.iter().all(|w| *w == Winner::Tie));
        assert!(!c.misleading);
    }

    #[test]
    fn scalarization() {
        let s = set("S", &[&[0.0, 1.0], &[1.0, 0.0], &[0.4, 0.4]]);
        let (best, score) = scalarize_best(&s, &[0.5, 0.5]).unwrap();
        assert_eq!(best.objectives(), &[0.4, 0.4]);
        assert!((score - 0.4).abs() < 1e-12);
        let (first, _) = scalarize_best(&s, &[1.0, 0.0]).unwrap();
        assert_eq!(first.objectives(), &[0.0, 1.0]);
        let tie = set("T", &[&[1.0, 0.0], &[0.0, 1.0]]);
        let (t, _) = scalarize_best(&tie, &[0.5, 0.5]).unwrap();
        assert_eq!(t.objectives(), &[1.0, 0.0]);
        assert!(scalarize_best(&s, &[1.0]).is_err());
        assert!(scalarize_best(&s, &[0.6, 0.6]).is_err());
    }

    #[test]
    fn representative_rules() {
        assert_eq!(representative_index(&[10.0, 20.0, 30.0]).unwrap(), 1);
        assert_eq!(representative_index(&[30.0, 10.0, 20.0]).unwrap(), 2);
        assert_eq!(representative_index(&[10.0, 20.0, 30.0, 40.0]).unwrap(), 1);
        assert_eq!(representative_index(&[5.0]).unwrap(), 0);
        assert!(representative_index::<f64>(&[]).is_err());
    }

    #[test]
    fn representative_run_by_hv() {
        // HV at (2,2): 1, 4 and 2.25
        let runs = vec![
            set("r1", &[&[1.0, 1.0]]),
            set("r2", &[&[0.0, 0.0]]),
            set("r3", &[&[0.5, 0.5]]),
        ];
        let rc = RunCollection::new("alg", runs).unwrap();
        let cfg = IndicatorConfig {
            hv_strategy: ReferencePointStrategy::Explicit(vec![2.0, 2.0]),
            normalization: NormalizationMode::NoNormalization,
            ..Default::default()
        };
        assert_eq!(select_representative_run(&rc, IndicatorName::Hv, &cfg).unwrap(), 2);
        assert!(matches!(
            select_representative_run(&rc, IndicatorName::Ci, &cfg),
            Err(Error::NotUnary(_))
        ));
    }

    #[test]
    fn summary_values() {
        let s = summarize(&[1.0, 4.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.mean, 2.5);
        assert_eq!(s.median, 2.5);
        assert_eq!((s.min, s.max), (1.0, 4.0));
    }
}
