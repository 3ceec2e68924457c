//! End-to-end evaluation: orientation, screening, preference transfer,
//! indicator computation over every run, cross-run summaries and
//! representative-run selection.

use serde::{Deserialize, Serialize};

use crate::doe::{representative_index, scalarize_best, summarize, RunCollection, RunSummary};
use crate::error::{Error, Result};
use crate::guidance::{
    lint, recommend, EvaluationPlan, LintContext, LintWarning, PlanContext, PreprocessStep,
};
use crate::indicators::{
    EvaluationContext, IndicatorConfig, IndicatorName, IndicatorResult, NormalizationMode,
};
use crate::preprocess::{
    apply_clear_preferences, apply_vague_preferences, build_reference_set, screen_trivial,
    to_minimization, PreferenceSpec, ReferencePointStrategy, Removal,
};
use crate::scalar::Scalar;
use crate::solution::{ObjectiveMeta, Solution, SolutionSet};

/// Caller overrides applied on top of the recommended plan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "T: Scalar"))]
pub struct EvaluationOptions<T> {
    /// Replaces the recommended indicator list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indicators: Option<Vec<IndicatorName>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gd_p: Option<T>,
    /// An explicit point is given in natural units over all declared
    /// objectives, or over the objectives left after transfer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hv_strategy: Option<ReferencePointStrategy<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_divisions: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<NormalizationMode>,
}

impl<T> Default for EvaluationOptions<T> {
    fn default() -> Self {
        Self {
            indicators: None,
            gd_p: None,
            hv_strategy: None,
            grid_divisions: None,
            normalization: None,
        }
    }
}

/// What preprocessing did to one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct RunLog<T> {
    pub algorithm: String,
    pub run: usize,
    pub initial: usize,
    pub screened: Vec<Removal<T>>,
    pub filtered: Vec<Removal<T>>,
    pub discarded: Vec<Removal<T>>,
    pub clamped_values: usize,
    pub remaining: usize,
}

/// Runs after orientation and preference transfer, in minimization
/// orientation and projected onto the evaluated objectives.
#[derive(Debug, Clone, PartialEq)]
pub struct PreparedRuns<T> {
    pub algorithms: Vec<RunCollection<T>>,
    pub evaluated_objectives: Vec<usize>,
    pub steps: Vec<PreprocessStep>,
    pub log: Vec<RunLog<T>>,
    pub warnings: Vec<String>,
}

fn check_algorithms<T: Scalar>(algorithms: &[RunCollection<T>]) -> Result<usize> {
    let first = algorithms.first().ok_or(Error::EmptySet("algorithms"))?;
    let m = first.m();
    for a in algorithms {
        if a.m() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: a.m(),
            });
        }
    }
    Ok(m)
}

fn map_runs<T: Scalar>(
    algorithms: &[RunCollection<T>],
    mut f: impl FnMut(usize, usize, &SolutionSet<T>) -> Result<SolutionSet<T>>,
) -> Result<Vec<RunCollection<T>>> {
    algorithms
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let runs = a
                .runs()
                .iter()
                .enumerate()
                .map(|(k, r)| f(i, k, r))
                .collect::<Result<Vec<_>>>()?;
            RunCollection::new(a.algorithm(), runs)
        })
        .collect()
}

fn all_runs<T: Scalar>(algorithms: &[RunCollection<T>]) -> Vec<SolutionSet<T>> {
    algorithms.iter().flat_map(|a| a.runs().iter().cloned()).collect()
}

/// Orients every run for minimization, then screens, applies clear
/// constraints and vague clamps, and projects out the objectives that clear
/// transfer fixes. `ExactlyBest` targets are resolved across all runs of
/// all algorithms.
pub fn prepare_runs<T: Scalar>(
    algorithms: &[RunCollection<T>],
    prefs: &PreferenceSpec<T>,
) -> Result<PreparedRuns<T>> {
    let m = check_algorithms(algorithms)?;
    prefs.validate(algorithms[0].meta())?;
    let mut log: Vec<RunLog<T>> = algorithms
        .iter()
        .flat_map(|a| {
            a.runs().iter().enumerate().map(|(k, r)| RunLog {
                algorithm: a.algorithm().to_owned(),
                run: k,
                initial: r.len(),
                screened: Vec::new(),
                filtered: Vec::new(),
                discarded: Vec::new(),
                clamped_values: 0,
                remaining: r.len(),
            })
        })
        .collect();
    let offsets: Vec<usize> = algorithms
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.runs().len();
            Some(o)
        })
        .collect();
    let mut warnings = Vec::new();
    let mut steps = Vec::new();

    let mut runs = map_runs(algorithms, |_, _, r| Ok(to_minimization(r)))?;

    if !prefs.screening.is_empty() {
        steps.push(PreprocessStep::Screen);
        let rules = prefs.resolve_best(&all_runs(&runs)).screening;
        runs = map_runs(&runs, |i, k, r| {
            let out = screen_trivial(r, &rules)?;
            warnings.extend(out.warnings);
            log[offsets[i] + k].screened = out.removed;
            Ok(out.set)
        })?;
    }
    if !prefs.clear.is_empty() {
        steps.push(PreprocessStep::ClearTransfer);
        let resolved = prefs.resolve_best(&all_runs(&runs));
        let clear_only = PreferenceSpec {
            clear: resolved.clear,
            ..PreferenceSpec::default()
        };
        runs = map_runs(&runs, |i, k, r| {
            let out = apply_clear_preferences(r, &clear_only)?;
            warnings.extend(out.warnings);
            log[offsets[i] + k].filtered = out.removed;
            Ok(out.set)
        })?;
    }
    if !prefs.vague.is_empty() {
        steps.push(PreprocessStep::VagueTransfer);
        runs = map_runs(&runs, |i, k, r| {
            let out = apply_vague_preferences(r, prefs)?;
            let entry = &mut log[offsets[i] + k];
            entry.discarded = out.discarded;
            entry.clamped_values = out.clamped_values;
            Ok(out.set)
        })?;
    }
    let dropped = prefs.exactly_best_objectives();
    let evaluated: Vec<usize> = (0..m).filter(|i| !dropped.contains(i)).collect();
    if evaluated.len() < m {
        runs = map_runs(&runs, |_, _, r| r.project(&evaluated))?;
    }
    for (entry, r) in log.iter_mut().zip(runs.iter().flat_map(|a| a.runs())) {
        entry.remaining = r.len();
        if r.is_empty() {
            warnings.push(format!(
                "run {} of '{}' is empty after preprocessing",
                entry.run, entry.algorithm
            ));
        }
    }
    Ok(PreparedRuns {
        algorithms: runs,
        evaluated_objectives: evaluated,
        steps,
        log,
        warnings,
    })
}

/// Values of one indicator for every run of one algorithm. A run without a
/// value could not be evaluated, e.g. because it was emptied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct AlgorithmValues<T> {
    pub algorithm: String,
    pub runs: Vec<Option<IndicatorResult<T>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<RunSummary<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct IndicatorSection<T> {
    pub indicator: IndicatorName,
    pub config: IndicatorConfig<T>,
    pub algorithms: Vec<AlgorithmValues<T>>,
}

/// A binary indicator applied to run `k` of `first` and run `k` of `second`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct PairwiseSection<T> {
    pub indicator: IndicatorName,
    pub first: String,
    pub second: String,
    pub runs: Vec<Option<IndicatorResult<T>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<RunSummary<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct Representative<T> {
    pub algorithm: String,
    pub run: usize,
    pub by: IndicatorName,
    pub value: T,
}

/// Best natural value of one objective per algorithm, summarized over runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct BestValueReport<T> {
    /// Index in the declared objective list.
    pub objective: usize,
    pub name: String,
    pub algorithms: Vec<(String, Option<RunSummary<T>>)>,
    /// Algorithms whose median best value is the best one.
    pub winners: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct ScalarizedChoice<T> {
    pub algorithm: String,
    pub run: usize,
    /// Natural units.
    pub objectives: Vec<T>,
    pub id: Option<String>,
    pub score: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct EvaluationReport<T> {
    /// Every declared objective, in natural orientation. Plan indices and
    /// `BestValueReport::objective` refer to this list.
    pub objectives: Vec<ObjectiveMeta<T>>,
    pub plan: EvaluationPlan<T>,
    pub preprocessing: Vec<RunLog<T>>,
    pub indicators: Vec<IndicatorSection<T>>,
    pub pairwise: Vec<PairwiseSection<T>>,
    pub representatives: Vec<Representative<T>>,
    pub best_values: Vec<BestValueReport<T>>,
    pub scalarized: Vec<ScalarizedChoice<T>>,
    pub lints: Vec<LintWarning>,
    pub warnings: Vec<String>,
}

fn natural_meta<T: Scalar>(meta: &[ObjectiveMeta<T>]) -> Vec<ObjectiveMeta<T>> {
    meta.iter()
        .map(|om| {
            let mut om = om.clone();
            om.direction = om.natural_direction();
            om.negated = false;
            om
        })
        .collect()
}

/// Maps an explicit natural-unit point into the prepared orientation.
fn orient_point<T: Scalar>(
    point: &[T],
    meta: &[ObjectiveMeta<T>],
    evaluated: &[usize],
    m: usize,
) -> Result<Vec<T>> {
    let projected: Vec<T> = if point.len() == evaluated.len() {
        point.to_vec()
    } else if point.len() == m {
        evaluated.iter().map(|&i| point[i]).collect()
    } else {
        return Err(Error::DimensionMismatch {
            expected: evaluated.len(),
            found: point.len(),
        });
    };
    Ok(projected
        .iter()
        .zip(meta)
        .map(|(&v, om)| om.from_natural(v))
        .collect())
}

fn effective_config<T: Scalar>(
    base: &IndicatorConfig<T>,
    options: &EvaluationOptions<T>,
    meta: &[ObjectiveMeta<T>],
    evaluated: &[usize],
    m: usize,
) -> Result<IndicatorConfig<T>> {
    let mut c = base.clone();
    if let Some(p) = options.gd_p {
        c.gd_p = p;
    }
    if let Some(s) = &options.hv_strategy {
        c.hv_strategy = match s {
            ReferencePointStrategy::Explicit(r) => {
                ReferencePointStrategy::Explicit(orient_point(r, meta, evaluated, m)?)
            }
            other => other.clone(),
        };
    }
    if let Some(g) = options.grid_divisions {
        c.grid_divisions = g;
    }
    if let Some(n) = options.normalization {
        c.normalization = n;
    }
    c.validate()?;
    Ok(c)
}

fn best_of<T: Scalar>(set: &SolutionSet<T>, objective: usize) -> Option<T> {
    let om = &set.meta()[objective];
    set.iter()
        .map(|p| p[objective])
        .min_by(crate::scalar::cmp)
        .map(|v| om.to_natural(v))
}

fn best_value_report<T: Scalar>(
    prepared: &PreparedRuns<T>,
    original: usize,
    natural: &[ObjectiveMeta<T>],
) -> Result<BestValueReport<T>> {
    let local = prepared
        .evaluated_objectives
        .iter()
        .position(|&i| i == original)
        .ok_or(Error::ObjectiveOutOfRange {
            index: original,
            m: prepared.evaluated_objectives.len(),
        })?;
    let om = &natural[local];
    let maximize = om.direction == crate::solution::Direction::Maximize;
    let mut algorithms = Vec::new();
    for a in &prepared.algorithms {
        let values: Vec<T> = a.runs().iter().filter_map(|r| best_of(r, local)).collect();
        algorithms.push((a.algorithm().to_owned(), summarize(&values).ok()));
    }
    let medians: Vec<Option<T>> = algorithms
        .iter()
        .map(|(_, s)| s.as_ref().map(|s| if maximize { -s.median } else { s.median }))
        .collect();
    let best = medians
        .iter()
        .flatten()
        .copied()
        .min_by(crate::scalar::cmp);
    let winners = match best {
        Some(b) => algorithms
            .iter()
            .zip(&medians)
            .filter(|(_, v)| **v == Some(b))
            .map(|((n, _), _)| n.clone())
            .collect(),
        None => Vec::new(),
    };
    Ok(BestValueReport {
        objective: original,
        name: om.name.clone(),
        algorithms,
        winners,
    })
}

fn unary_section<T: Scalar>(
    name: IndicatorName,
    ctx: &EvaluationContext<T>,
    prepared: &PreparedRuns<T>,
    warnings: &mut Vec<String>,
) -> IndicatorSection<T> {
    let algorithms = prepared
        .algorithms
        .iter()
        .map(|a| {
            let runs: Vec<Option<IndicatorResult<T>>> = a
                .runs()
                .iter()
                .enumerate()
                .map(|(k, r)| match ctx.evaluate(name, r) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        warnings.push(format!("{name} on run {k} of '{}': {e}", a.algorithm()));
                        None
                    }
                })
                .collect();
            let values: Vec<T> = runs.iter().flatten().map(|r| r.value).collect();
            AlgorithmValues {
                algorithm: a.algorithm().to_owned(),
                summary: summarize(&values).ok(),
                runs,
            }
        })
        .collect();
    IndicatorSection {
        indicator: name,
        config: ctx.config().clone(),
        algorithms,
    }
}

fn pairwise_sections<T: Scalar>(
    name: IndicatorName,
    ctx: &EvaluationContext<T>,
    prepared: &PreparedRuns<T>,
    warnings: &mut Vec<String>,
) -> Vec<PairwiseSection<T>> {
    let algs = &prepared.algorithms;
    let mut out = Vec::new();
    for (i, a) in algs.iter().enumerate() {
        for (j, b) in algs.iter().enumerate() {
            if i == j {
                continue;
            }
            let runs: Vec<Option<IndicatorResult<T>>> = a
                .runs()
                .iter()
                .zip(b.runs())
                .enumerate()
                .map(|(k, (ra, rb))| match ctx.compare(name, ra, rb) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        warnings.push(format!(
                            "{name}('{}', '{}') on run {k}: {e}",
                            a.algorithm(),
                            b.algorithm()
                        ));
                        None
                    }
                })
                .collect();
            let values: Vec<T> = runs.iter().flatten().map(|r| r.value).collect();
            out.push(PairwiseSection {
                indicator: name,
                first: a.algorithm().to_owned(),
                second: b.algorithm().to_owned(),
                summary: summarize(&values).ok(),
                runs,
            });
        }
    }
    out
}

/// Everything decided before any indicator is computed.
struct Setup<T> {
    prepared: PreparedRuns<T>,
    plan: EvaluationPlan<T>,
    chosen: Vec<(IndicatorName, IndicatorConfig<T>)>,
    meta: Vec<ObjectiveMeta<T>>,
    lints: Vec<LintWarning>,
    warnings: Vec<String>,
}

fn setup<T: Scalar>(
    algorithms: &[RunCollection<T>],
    prefs: &PreferenceSpec<T>,
    options: &EvaluationOptions<T>,
) -> Result<Setup<T>> {
    let m = check_algorithms(algorithms)?;
    let prepared = prepare_runs(algorithms, prefs)?;
    let warnings = prepared.warnings.clone();
    let set_sizes = algorithms
        .iter()
        .flat_map(|a| a.runs().iter().map(SolutionSet::len))
        .collect();
    let plan = recommend(
        prefs,
        m,
        &PlanContext {
            meta: Some(algorithms[0].meta().to_vec()),
            set_sizes,
        },
    )?;
    let evaluated = &prepared.evaluated_objectives;
    let meta = prepared.algorithms[0].meta().to_vec();

    let mut chosen: Vec<(IndicatorName, IndicatorConfig<T>)> = match &options.indicators {
        Some(names) => names.iter().map(|&n| (n, IndicatorConfig::default())).collect(),
        None => plan.chosen(),
    };
    for (_, c) in &mut chosen {
        *c = effective_config(c, options, &meta, evaluated, m)?;
    }

    let runs = all_runs(&prepared.algorithms);
    let nadir = build_reference_set(&runs).ok().and_then(|r| {
        (!r.is_empty()).then(|| {
            (0..r.m())
                .map(|j| {
                    r.iter()
                        .map(|p| p[j].as_f64())
                        .fold(f64::NEG_INFINITY, f64::max)
                })
                .collect()
        })
    });
    let lint_ctx = LintContext {
        preprocessing: {
            let mut s = prepared.steps.clone();
            s.push(PreprocessStep::Normalize);
            s
        },
        plotting: Some(plan.plotting),
        doe: plan.doe_steps.iter().map(|d| d.stat).collect(),
        combined_front_reference: true,
        nadir,
    };
    let lints = lint(&chosen, prefs, evaluated.len(), &lint_ctx);
    Ok(Setup {
        prepared,
        plan,
        chosen,
        meta,
        lints,
        warnings,
    })
}

/// Lints the evaluation [`evaluate`] would run, without computing any
/// indicator. Returns the recommended plan alongside the findings.
pub fn lint_setup<T: Scalar>(
    algorithms: &[RunCollection<T>],
    prefs: &PreferenceSpec<T>,
    options: &EvaluationOptions<T>,
) -> Result<(EvaluationPlan<T>, Vec<LintWarning>)> {
    let s = setup(algorithms, prefs, options)?;
    Ok((s.plan, s.lints))
}

/// Evaluates every run of every algorithm.
///
/// Indicators come from [`recommend`] unless `options` names them. Every
/// indicator is computed against reference data built from all prepared
/// runs of all algorithms. The representative run of an algorithm is the
/// one whose value is nearest the median of the first unary indicator,
/// preferring HV.
pub fn evaluate<T: Scalar>(
    algorithms: &[RunCollection<T>],
    prefs: &PreferenceSpec<T>,
    options: &EvaluationOptions<T>,
) -> Result<EvaluationReport<T>> {
    let Setup {
        prepared,
        plan,
        chosen,
        meta,
        lints,
        mut warnings,
    } = setup(algorithms, prefs, options)?;
    let evaluated = &prepared.evaluated_objectives;
    let natural = natural_meta(&meta);
    let runs = all_runs(&prepared.algorithms);

    let mut contexts: Vec<(IndicatorConfig<T>, EvaluationContext<T>)> = Vec::new();
    let mut indicators = Vec::new();
    let mut pairwise = Vec::new();
    for (name, config) in &chosen {
        let idx = match contexts.iter().position(|(c, _)| c == config) {
            Some(i) => i,
            None => {
                let ctx = EvaluationContext::build(&runs, config)?;
                warnings.extend(ctx.warnings().iter().cloned());
                contexts.push((config.clone(), ctx));
                contexts.len() - 1
            }
        };
        let ctx = &contexts[idx].1;
        if name.is_unary() {
            indicators.push(unary_section(*name, ctx, &prepared, &mut warnings));
        }
        if name.is_binary() && prepared.algorithms.len() > 1 {
            pairwise.extend(pairwise_sections(*name, ctx, &prepared, &mut warnings));
        }
    }

    let mut representatives = Vec::new();
    let lead = indicators
        .iter()
        .find(|s| s.indicator == IndicatorName::Hv)
        .or_else(|| indicators.first());
    if let Some(section) = lead {
        for a in &section.algorithms {
            let indexed: Vec<(usize, T)> = a
                .runs
                .iter()
                .enumerate()
                .filter_map(|(k, r)| r.as_ref().map(|r| (k, r.value)))
                .collect();
            let values: Vec<T> = indexed.iter().map(|&(_, v)| v).collect();
            if let Ok(i) = representative_index(&values) {
                representatives.push(Representative {
                    algorithm: a.algorithm.clone(),
                    run: indexed[i].0,
                    by: section.indicator,
                    value: indexed[i].1,
                });
            }
        }
    }

    let mut best_values = Vec::new();
    let mut best_targets: Vec<usize> = plan.best_value.into_iter().collect();
    for step in &plan.doe_steps {
        for &o in &step.objectives {
            if !best_targets.contains(&o) {
                best_targets.push(o);
            }
        }
    }
    for o in best_targets {
        best_values.push(best_value_report(&prepared, o, &natural)?);
    }

    let mut scalarized = Vec::new();
    if let (Some(w), Some((_, ctx))) = (&prefs.weights, contexts.first()) {
        let w: Vec<T> = evaluated.iter().map(|&i| w[i]).collect();
        let total: T = w.iter().copied().sum();
        if total > T::zero() {
            let w: Vec<T> = w.iter().map(|&x| x / total).collect();
            for rep in &representatives {
                let alg = prepared
                    .algorithms
                    .iter()
                    .find(|a| a.algorithm() == rep.algorithm)
                    .expect("representative names a prepared algorithm");
                let raw = &alg.runs()[rep.run];
                let normalized = ctx.prepare(raw)?;
                if let Ok((_, score)) = scalarize_best(&normalized, &w) {
                    let i = normalized
                        .iter()
                        .position(|p| {
                            p.iter().zip(&w).map(|(&f, &x)| f * x).sum::<T>() == score
                        })
                        .unwrap_or(0);
                    let s: &Solution<T> = &raw.solutions()[i];
                    scalarized.push(ScalarizedChoice {
                        algorithm: rep.algorithm.clone(),
                        run: rep.run,
                        objectives: s
                            .objectives()
                            .iter()
                            .zip(&meta)
                            .map(|(&v, om)| om.to_natural(v))
                            .collect(),
                        id: s.id.clone(),
                        score,
                    });
                }
            }
        }
    }

    Ok(EvaluationReport {
        objectives: natural_meta(algorithms[0].meta()),
        plan,
        preprocessing: prepared.log,
        indicators,
        pairwise,
        representatives,
        best_values,
        scalarized,
        lints,
        warnings,
    })
}
