//! The decision procedure that turns preferences into an evaluation plan.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::lint::{lint, Issue, LintContext, LintWarning};
use crate::doe::DoeStat;
use crate::error::{Error, Result};
use crate::indicators::{IndicatorConfig, IndicatorName, MAX_HV_OBJECTIVES};
use crate::preprocess::{PreferenceSpec, ReferencePointStrategy, Roi};
use crate::scalar::Scalar;
use crate::solution::{default_meta, ObjectiveMeta};

/// Decision and process nodes of the evaluation procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Node {
    P1,
    P2,
    P3,
    P4,
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    D9,
    D10,
    D11,
    D12,
    D13,
    D14,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PreprocessStep {
    Screen,
    ClearTransfer,
    VagueTransfer,
    Normalize,
}

impl fmt::Display for PreprocessStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Screen => "screen",
            Self::ClearTransfer => "clear-transfer",
            Self::VagueTransfer => "vague-transfer",
            Self::Normalize => "normalize",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotKind {
    Scatter,
    ParallelCoordinates,
}

impl PlotKind {
    pub fn for_objectives(m: usize) -> Self {
        if m <= 3 {
            Self::Scatter
        } else {
            Self::ParallelCoordinates
        }
    }
}

impl fmt::Display for PlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Scatter => "scatter",
            Self::ParallelCoordinates => "parallel-coordinates",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct PlannedIndicator<T> {
    pub name: IndicatorName,
    pub config: IndicatorConfig<T>,
    pub node: Node,
    pub rationale: String,
}

/// An indicator the plan deliberately leaves out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub name: IndicatorName,
    pub issue: Issue,
    pub reason: String,
}

/// Descriptive statistic to report alongside the indicators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoeStep {
    pub stat: DoeStat,
    /// Objective indices in the original numbering.
    pub objectives: Vec<usize>,
    pub node: Node,
    pub rationale: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanNote {
    pub node: Node,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct EvaluationPlan<T> {
    pub preprocessing: Vec<PreprocessStep>,
    pub indicators: Vec<PlannedIndicator<T>>,
    /// Set when a single objective remains after clear transfer; the sets
    /// are then compared on their best value of that objective.
    pub best_value: Option<usize>,
    pub doe_steps: Vec<DoeStep>,
    pub plotting: PlotKind,
    /// Objectives the indicators see after preference transfer.
    pub evaluated_objectives: Vec<usize>,
    pub excluded: Vec<Exclusion>,
    pub notes: Vec<PlanNote>,
    pub warnings: Vec<LintWarning>,
}

impl<T: Scalar> EvaluationPlan<T> {
    pub fn chosen(&self) -> Vec<(IndicatorName, IndicatorConfig<T>)> {
        self.indicators
            .iter()
            .map(|p| (p.name, p.config.clone()))
            .collect()
    }

    pub fn names(&self) -> Vec<IndicatorName> {
        self.indicators.iter().map(|p| p.name).collect()
    }
}

/// Metadata about the sets to be compared.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct PlanContext<T> {
    /// Objective metadata; minimized `f1..fm` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Vec<ObjectiveMeta<T>>>,
    #[serde(default)]
    pub set_sizes: Vec<usize>,
}

impl LintContext {
    /// The evaluation a plan describes.
    pub fn for_plan<T: Scalar>(plan: &EvaluationPlan<T>) -> Self {
        Self {
            preprocessing: plan.preprocessing.clone(),
            plotting: Some(plan.plotting),
            doe: plan.doe_steps.iter().map(|d| d.stat).collect(),
            combined_front_reference: true,
            nadir: None,
        }
    }
}

/// Lints a plan against the preferences it was built from.
pub fn lint_plan<T: Scalar>(plan: &EvaluationPlan<T>, prefs: &PreferenceSpec<T>) -> Vec<LintWarning> {
    lint(
        &plan.chosen(),
        prefs,
        plan.evaluated_objectives.len(),
        &LintContext::for_plan(plan),
    )
}

fn planned<T: Scalar>(
    name: IndicatorName,
    strategy: ReferencePointStrategy<T>,
    node: Node,
    rationale: &str,
) -> PlannedIndicator<T> {
    PlannedIndicator {
        name,
        config: IndicatorConfig {
            hv_strategy: strategy,
            ..IndicatorConfig::default()
        },
        node,
        rationale: format!("{node}: {rationale}"),
    }
}

/// HV when the objective count allows it, otherwise the additive epsilon
/// indicator, which is also Pareto compliant.
fn comprehensive<T: Scalar>(
    m: usize,
    strategy: ReferencePointStrategy<T>,
    node: Node,
    rationale: &str,
    notes: &mut Vec<PlanNote>,
) -> PlannedIndicator<T> {
    if m <= MAX_HV_OBJECTIVES {
        planned(IndicatorName::Hv, strategy, node, rationale)
    } else {
        notes.push(PlanNote {
            node,
            text: format!(
                "exact HV is limited to {MAX_HV_OBJECTIVES} objectives; EPS replaces it"
            ),
        });
        planned(
            IndicatorName::Epsilon,
            ReferencePointStrategy::NadirPlusTenth,
            node,
            "additive epsilon indicator as the Pareto-compliant comprehensive measure",
        )
    }
}

fn general_indicators<T: Scalar>(m: usize, notes: &mut Vec<PlanNote>) -> Vec<PlannedIndicator<T>> {
    let strategy = ReferencePointStrategy::NadirPlusTenth;
    let mut out = vec![
        planned(
            IndicatorName::GdPlus,
            strategy.clone(),
            Node::D3,
            "GD+ for convergence",
        ),
        if m == 2 {
            planned(
                IndicatorName::Spread,
                strategy.clone(),
                Node::D4,
                "Spread for spread and uniformity of a bi-objective front",
            )
        } else {
            planned(
                IndicatorName::GridDiversity,
                strategy.clone(),
                Node::D4,
                "grid diversity for spread and uniformity, valid for any objective count",
            )
        },
        planned(
            IndicatorName::Unfr,
            strategy.clone(),
            Node::D5,
            "UNFR for cardinality",
        ),
    ];
    out.push(comprehensive(
        m,
        strategy,
        Node::D2,
        "HV as a comprehensive, Pareto-compliant indicator with the reference point at nadir + range/10",
        notes,
    ));
    out
}

/// Runs the decision procedure for `m` objectives.
pub fn recommend<T: Scalar>(
    prefs: &PreferenceSpec<T>,
    m: usize,
    ctx: &PlanContext<T>,
) -> Result<EvaluationPlan<T>> {
    if m == 0 {
        return Err(Error::NoObjectives);
    }
    let meta = match &ctx.meta {
        Some(meta) if meta.len() != m => {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: meta.len(),
            })
        }
        Some(meta) => meta.clone(),
        None => default_meta(m),
    };
    prefs.validate(&meta)?;

    let mut notes = Vec::new();
    let mut preprocessing = Vec::new();
    if prefs.screening.is_empty() {
        notes.push(PlanNote {
            node: Node::P1,
            text: "no screening rules declared; trivial solutions are kept".into(),
        });
    } else {
        preprocessing.push(PreprocessStep::Screen);
    }

    let dropped = prefs.exactly_best_objectives();
    let evaluated: Vec<usize> = (0..m).filter(|i| !dropped.contains(i)).collect();
    let m_eval = evaluated.len();
    if !prefs.clear.is_empty() {
        preprocessing.push(PreprocessStep::ClearTransfer);
    }
    if !prefs.vague.is_empty() {
        preprocessing.push(PreprocessStep::VagueTransfer);
    }
    preprocessing.push(PreprocessStep::Normalize);

    if prefs.untransferable {
        notes.push(PlanNote {
            node: Node::D7,
            text: "qualitative preferences that cannot be transferred are treated as the general case".into(),
        });
    }
    if prefs.weights.is_some() {
        notes.push(PlanNote {
            node: Node::D10,
            text: "weights are not built into an indicator; they only select the best scalarized solution".into(),
        });
    }

    let mut doe_steps = Vec::new();
    let mut excluded = Vec::new();
    let mut best_value = None;
    let indicators = if m_eval == 1 {
        let objective = evaluated[0];
        best_value = Some(objective);
        doe_steps.push(DoeStep {
            stat: DoeStat::Best,
            objectives: vec![objective],
            node: Node::P2,
            rationale: format!(
                "P2: only '{}' remains after transfer; compare the best value",
                meta[objective].name
            ),
        });
        vec![planned(
            IndicatorName::Hv,
            ReferencePointStrategy::NadirPlusTenth,
            Node::P2,
            "one-objective HV, which orders sets by their best value",
        )]
    } else {
        match &prefs.roi {
            Roi::Knee => {
                for (name, what) in [
                    (IndicatorName::Igd, "IGD"),
                    (IndicatorName::Gd, "GD"),
                    (IndicatorName::Ci, "CI"),
                ] {
                    excluded.push(Exclusion {
                        name,
                        issue: Issue::V,
                        reason: format!("{what} does not favour knee points"),
                    });
                }
                vec![comprehensive(
                    m_eval,
                    ReferencePointStrategy::NadirPlusTenth,
                    Node::D11,
                    "HV favours knee points when the reference point is close to the nadir",
                    &mut notes,
                )]
            }
            Roi::Extreme(objectives) => {
                excluded.push(Exclusion {
                    name: IndicatorName::Igd,
                    issue: Issue::V,
                    reason: "IGD does not favour extreme solutions".into(),
                });
                doe_steps.push(DoeStep {
                    stat: DoeStat::Best,
                    objectives: objectives.clone(),
                    node: Node::D12,
                    rationale: "D12: report the best value of each preferred objective".into(),
                });
                vec![comprehensive(
                    m_eval,
                    ReferencePointStrategy::DoubledRange,
                    Node::D12,
                    "HV with a distant reference point rewards extreme solutions",
                    &mut notes,
                )]
            }
            Roi::None => general_indicators(m_eval, &mut notes),
        }
    };

    notes.push(PlanNote {
        node: Node::D13,
        text: "apply a statistical significance test to per-run indicator values before claiming a difference".into(),
    });
    let plotting = PlotKind::for_objectives(m_eval);
    notes.push(PlanNote {
        node: Node::D14,
        text: format!("plot the representative run of each algorithm as {plotting}"),
    });

    let mut plan = EvaluationPlan {
        preprocessing,
        indicators,
        best_value,
        doe_steps,
        plotting,
        evaluated_objectives: evaluated,
        excluded,
        notes,
        warnings: Vec::new(),
    };
    plan.warnings = lint_plan(&plan, prefs);
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guidance::lint::LintCode;
    use crate::preprocess::{ClearConstraint, VagueClamp};

    fn none() -> PreferenceSpec<f64> {
        PreferenceSpec::default()
    }

    fn ctx() -> PlanContext<f64> {
        PlanContext::default()
    }

    #[test]
    fn general_plan_for_two_objectives() {
        let plan = recommend(&none(), 2, &ctx()).unwrap();
        assert_eq!(
            plan.names(),
            vec![
                IndicatorName::GdPlus,
                IndicatorName::Spread,
                IndicatorName::Unfr,
                IndicatorName::Hv
            ]
        );
        assert_eq!(plan.indicators[3].config.hv_strategy, ReferencePointStrategy::NadirPlusTenth);
        assert_eq!(plan.plotting, PlotKind::Scatter);
        assert_eq!(plan.preprocessing, vec![PreprocessStep::Normalize]);
        assert!(plan.warnings.is_empty());
        assert!(plan.notes.iter().any(|n| n.node == Node::D13));
    }

    #[test]
    fn general_plan_switches_diversity_and_plot() {
        let plan = recommend(&none(), 5, &ctx()).unwrap();
        assert!(plan.names().contains(&IndicatorName::GridDiversity));
        assert!(!plan.names().contains(&IndicatorName::Spread));
        assert_eq!(plan.plotting, PlotKind::ParallelCoordinates);
        let big = recommend(&none(), 12, &ctx()).unwrap();
        assert!(big.names().contains(&IndicatorName::Epsilon));
        assert!(big.warnings.is_empty());
    }

    #[test]
    fn rationale_names_a_node() {
        let plan = recommend(&none(), 3, &ctx()).unwrap();
        for p in &plan.indicators {
            assert!(p.rationale.starts_with(&p.node.to_string()));
        }
    }

    #[test]
    fn exactly_best_leaving_cost() {
        let meta: Vec<ObjectiveMeta<f64>> = vec![
            ObjectiveMeta::minimize("cost"),
            ObjectiveMeta::maximize("coverage"),
        ];
        let prefs = PreferenceSpec {
            clear: vec![ClearConstraint::exactly_best(1, None)],
            ..Default::default()
        };
        let plan = recommend(&prefs, 2, &PlanContext { meta: Some(meta), set_sizes: vec![4, 5] }).unwrap();
        assert_eq!(plan.best_value, Some(0));
        assert_eq!(plan.evaluated_objectives, vec![0]);
        assert_eq!(plan.preprocessing[0], PreprocessStep::ClearTransfer);
        assert_eq!(plan.doe_steps[0].stat, DoeStat::Best);
        assert!(plan.warnings.is_empty());
    }

    #[test]
    fn knee_excludes_igd() {
        let prefs = PreferenceSpec {
            roi: Roi::Knee,
            ..none()
        };
        let plan = recommend(&prefs, 3, &ctx()).unwrap();
        assert_eq!(plan.names(), vec![IndicatorName::Hv]);
        assert_eq!(plan.indicators[0].node, Node::D11);
        assert!(plan
            .excluded
            .iter()
            .any(|e| e.name == IndicatorName::Igd && e.issue == Issue::V));
        assert!(plan.warnings.is_empty());
    }

    #[test]
    fn extreme_uses_distant_reference() {
        let prefs = PreferenceSpec {
            roi: Roi::Extreme(vec![0]),
            ..none()
        };
        let plan = recommend(&prefs, 2, &ctx()).unwrap();
        assert_eq!(plan.indicators[0].config.hv_strategy, ReferencePointStrategy::DoubledRange);
        assert_eq!(plan.doe_steps[0].objectives, vec![0]);
        assert!(plan.warnings.is_empty());
    }

    #[test]
    fn vague_then_general() {
        let prefs = PreferenceSpec {
            vague: vec![VagueClamp {
                objective: 1,
                saturation: 3000.0,
                hard_floor: Some(1000.0),
            }],
            ..none()
        };
        let meta = vec![ObjectiveMeta::minimize("cost"), ObjectiveMeta::maximize("users")];
        let plan = recommend(&prefs, 2, &PlanContext { meta: Some(meta), set_sizes: vec![] }).unwrap();
        assert_eq!(
            plan.preprocessing,
            vec![PreprocessStep::VagueTransfer, PreprocessStep::Normalize]
        );
        assert_eq!(plan.indicators.len(), 4);
        assert!(plan.warnings.is_empty());
    }

    #[test]
    fn inconsistent_preferences_are_rejected() {
        let prefs = PreferenceSpec {
            clear: vec![ClearConstraint::exactly_best(0, None)],
            vague: vec![VagueClamp {
                objective: 0,
                saturation: 1.0,
                hard_floor: None,
            }],
            ..none()
        };
        assert!(matches!(
            recommend(&prefs, 2, &ctx()),
            Err(Error::InconsistentPreferences(_))
        ));
        let bad_meta = PlanContext {
            meta: Some(default_meta(3)),
            set_sizes: vec![],
        };
        assert!(recommend(&none(), 2, &bad_meta).is_err());
    }

    #[test]
    fn untransferable_falls_through() {
        let prefs = PreferenceSpec {
            untransferable: true,
            ..none()
        };
        let plan = recommend(&prefs, 2, &ctx()).unwrap();
        assert_eq!(plan.indicators.len(), 4);
        assert!(plan.notes.iter().any(|n| n.node == Node::D7));
    }

    #[test]
    fn lint_plan_sees_missing_transfer() {
        let prefs = PreferenceSpec {
            clear: vec![ClearConstraint::at_most(0, 5.0)],
            ..none()
        };
        let mut plan = recommend(&prefs, 2, &ctx()).unwrap();
        plan.preprocessing.retain(|s| *s != PreprocessStep::ClearTransfer);
        let w = lint_plan(&plan, &prefs);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].code, LintCode::PrefIgnored);
    }

    #[test]
    fn plans_round_trip_through_json() {
        let plan = recommend(&none(), 2, &ctx()).unwrap();
        let s = serde_json::to_string(&plan).unwrap();
        let back: EvaluationPlan<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, plan);
    }
}
