//! Plain-text renderings. Numbers use the shortest round-trip decimal form
//! so identical inputs always give identical bytes.

use std::fmt::Write;

use paretoq::doe::RunSummary;
use paretoq::guidance::{lint_code_table, EvaluationPlan, LintWarning};
use paretoq::indicators::{IndicatorConfig, IndicatorResult, NormalizationMode};
use paretoq::pipeline::{EvaluationReport, PairwiseSection, RunLog};
use paretoq::preprocess::ReferencePointStrategy;
use paretoq::ObjectiveMeta;

fn num(v: f64) -> String {
    format!("{v}")
}

fn names(meta: &[ObjectiveMeta<f64>], idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| meta.get(i).map_or_else(|| format!("#{i}"), |om| om.name.clone()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn summary(s: &Option<RunSummary<f64>>) -> String {
    match s {
        Some(s) if s.runs == 1 => num(s.median),
        Some(s) => format!(
            "median {} mean {} min {} max {} ({} runs)",
            num(s.median),
            num(s.mean),
            num(s.min),
            num(s.max),
            s.runs
        ),
        None => "n/a".into(),
    }
}

fn run_values(runs: &[Option<IndicatorResult<f64>>]) -> String {
    runs.iter()
        .map(|r| r.as_ref().map_or_else(|| "n/a".into(), |r| num(r.value)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn config_line(c: &IndicatorConfig<f64>) -> String {
    let reference = match &c.hv_strategy {
        ReferencePointStrategy::Explicit(p) => {
            format!("explicit({})", p.iter().map(|&v| num(v)).collect::<Vec<_>>().join(","))
        }
        s => s.label().to_owned(),
    };
    let norm = match c.normalization {
        NormalizationMode::CombinedFront => "combined-front",
        NormalizationMode::HardBounds => "hard-bounds",
        NormalizationMode::NoNormalization => "none",
    };
    format!(
        "normalization {norm}, reference point {reference}, p {}, grid {}",
        num(c.gd_p),
        c.grid_divisions
    )
}

pub fn lints(out: &mut String, lints: &[LintWarning]) {
    if lints.is_empty() {
        out.push_str("lints: none\n");
        return;
    }
    out.push_str("lints:\n");
    for l in lints {
        let issue = l.issue.map(|i| format!(" (Issue {i})")).unwrap_or_default();
        let _ = writeln!(out, "  [{}] {}{issue}: {}", l.severity, l.code, l.message);
    }
}

pub fn plan(out: &mut String, plan: &EvaluationPlan<f64>, meta: &[ObjectiveMeta<f64>]) {
    out.push_str("plan\n");
    let steps: Vec<String> = plan.preprocessing.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "  preprocessing: {}", steps.join(", "));
    let _ = writeln!(out, "  evaluated objectives: {}", names(meta, &plan.evaluated_objectives));
    if let Some(o) = plan.best_value {
        let _ = writeln!(out, "  compare best value of: {}", names(meta, &[o]));
    }
    out.push_str("  indicators:\n");
    for p in &plan.indicators {
        let _ = writeln!(out, "    {} - {}", p.name, p.rationale);
    }
    for d in &plan.doe_steps {
        let _ = writeln!(
            out,
            "  doe: {:?} of {} - {}",
            d.stat,
            names(meta, &d.objectives),
            d.rationale
        );
    }
    for e in &plan.excluded {
        let _ = writeln!(out, "  excluded: {} (Issue {}) - {}", e.name, e.issue, e.reason);
    }
    let _ = writeln!(out, "  plotting: {}", plan.plotting);
    for n in &plan.notes {
        let _ = writeln!(out, "  note {}: {}", n.node, n.text);
    }
}

fn preprocessing_log(out: &mut String, log: &[RunLog<f64>]) {
    let changed: Vec<&RunLog<f64>> = log
        .iter()
        .filter(|l| l.remaining != l.initial || l.clamped_values > 0)
        .collect();
    if changed.is_empty() {
        return;
    }
    out.push_str("preprocessing\n");
    for l in changed {
        let _ = writeln!(
            out,
            "  {} run {}: {} -> {} (screened {}, filtered {}, discarded {}, clamped values {})",
            l.algorithm,
            l.run,
            l.initial,
            l.remaining,
            l.screened.len(),
            l.filtered.len(),
            l.discarded.len(),
            l.clamped_values
        );
    }
}

pub fn pairwise(out: &mut String, sections: &[PairwiseSection<f64>]) {
    for p in sections {
        let _ = write!(out, "  {}({}, {}) = {}", p.indicator, p.first, p.second, summary(&p.summary));
        if p.runs.len() > 1 {
            let _ = write!(out, " [runs: {}]", run_values(&p.runs));
        }
        out.push('\n');
    }
}

pub fn evaluation(r: &EvaluationReport<f64>) -> String {
    let mut out = String::new();
    let objectives: Vec<String> = r
        .objectives
        .iter()
        .map(|om| format!("{} ({:?})", om.name, om.direction).to_lowercase())
        .collect();
    let _ = writeln!(out, "objectives: {}", objectives.join(", "));
    plan(&mut out, &r.plan, &r.objectives);
    preprocessing_log(&mut out, &r.preprocessing);
    for s in &r.indicators {
        let _ = writeln!(out, "{} [{}]", s.indicator, config_line(&s.config));
        for a in &s.algorithms {
            let _ = write!(out, "  {}: {}", a.algorithm, summary(&a.summary));
            if a.runs.len() > 1 {
                let _ = write!(out, " [runs: {}]", run_values(&a.runs));
            }
            out.push('\n');
        }
    }
    if !r.pairwise.is_empty() {
        out.push_str("pairwise\n");
        pairwise(&mut out, &r.pairwise);
    }
    if !r.representatives.is_empty() {
        out.push_str("representative runs\n");
        for rep in &r.representatives {
            let _ = writeln!(out, "  {}: run {} ({} {})", rep.algorithm, rep.run, rep.by, num(rep.value));
        }
    }
    for b in &r.best_values {
        let _ = writeln!(out, "best {}", b.name);
        for (alg, s) in &b.algorithms {
            let _ = writeln!(out, "  {alg}: {}", summary(s));
        }
        let _ = writeln!(out, "  winner: {}", b.winners.join(", "));
    }
    if !r.scalarized.is_empty() {
        out.push_str("weighted choice\n");
        for c in &r.scalarized {
            let values: Vec<String> = c.objectives.iter().map(|&v| num(v)).collect();
            let id = c.id.as_deref().map(|i| format!(" id {i}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} run {}{id}: ({}) score {}",
                c.algorithm,
                c.run,
                values.join(", "),
                num(c.score)
            );
        }
    }
    lints(&mut out, &r.lints);
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

pub fn code_table() -> String {
    let mut out = String::new();
    for row in lint_code_table() {
        let _ = writeln!(
            out,
            "{:<18} {:<4} {:<8} {}",
            row.code.to_string(),
            row.issue.to_string(),
            row.severity.to_string(),
            row.summary
        );
    }
    out
}
