//! Evaluation planning and setup linting.

mod lint;
mod plan;

pub use lint::{
    aspect_coverage, aspect_coverage_of_names, lint, lint_code_table, max_severity, AspectCoverage,
    Issue, LintCode, LintCodeInfo, LintContext, LintWarning, Severity,
};
pub use plan::{
    lint_plan, recommend, DoeStep, EvaluationPlan, Exclusion, Node, PlanContext, PlanNote,
    PlannedIndicator, PlotKind, PreprocessStep,
};
