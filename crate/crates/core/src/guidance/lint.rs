//! Lint rules for evaluation setups.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::plan::{PlotKind, PreprocessStep};
use crate::doe::DoeStat;
use crate::indicators::{Aspect, IndicatorConfig, IndicatorName, Level, MAX_HV_OBJECTIVES};
use crate::preprocess::{PreferenceSpec, ReferencePointStrategy, Roi};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Issue {
    /// Oblivion of context information: solution set plotting alone.
    I,
    /// Descriptive objective statistics used as the comparison.
    II,
    /// Indicator chosen without regard to what it measures or needs.
    III,
    /// Preferences known but not reflected.
    IV,
    /// Indicator at odds with the preferred front region.
    V,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::V => "V",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Info => "info",
            Self::Warning => "warning",
            Self::Error => "error",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LintCode {
    SspOnly,
    DoeSole,
    AspectGap,
    SpreadDim,
    IgdRefset,
    HvRefpoint,
    HvDim,
    PrefIgnored,
    KneeMismatch,
    ExtremeMismatch,
}

impl LintCode {
    pub const ALL: [LintCode; 10] = [
        Self::SspOnly,
        Self::DoeSole,
        Self::AspectGap,
        Self::SpreadDim,
        Self::IgdRefset,
        Self::HvRefpoint,
        Self::HvDim,
        Self::PrefIgnored,
        Self::KneeMismatch,
        Self::ExtremeMismatch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::SspOnly => "L-SSP-ONLY",
            Self::DoeSole => "L-DOE-SOLE",
            Self::AspectGap => "L-ASPECT-GAP",
            Self::SpreadDim => "L-SPREAD-DIM",
            Self::IgdRefset => "L-IGD-REFSET",
            Self::HvRefpoint => "L-HV-REFPOINT",
            Self::HvDim => "L-HV-DIM",
            Self::PrefIgnored => "L-PREF-IGNORED",
            Self::KneeMismatch => "L-KNEE-MISMATCH",
            Self::ExtremeMismatch => "L-EXTREME-MISMATCH",
        }
    }

    pub fn issue(self) -> Issue {
        match self {
            Self::SspOnly => Issue::I,
            Self::DoeSole => Issue::II,
            Self::AspectGap
            | Self::SpreadDim
            | Self::IgdRefset
            | Self::HvRefpoint
            | Self::HvDim => Issue::III,
            Self::PrefIgnored => Issue::IV,
            Self::KneeMismatch | Self::ExtremeMismatch => Issue::V,
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            Self::SpreadDim | Self::HvDim => Severity::Error,
            Self::SspOnly | Self::IgdRefset => Severity::Info,
            _ => Severity::Warning,
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Self::SspOnly => "plotting is the only evaluation, or scatter plots requested for more than 3 objectives",
            Self::DoeSole => "mean/median/worst objective statistics are the only comparison",
            Self::AspectGap => "chosen indicators miss a quality aspect while no preferences are given",
            Self::SpreadDim => "Spread used with other than 2 objectives",
            Self::IgdRefset => "IGD measured against the combined front of the compared sets",
            Self::HvRefpoint => "HV reference point at the worst values or the nadir overemphasizes boundary solutions",
            Self::HvDim => "HV requested for more objectives than the exact algorithm accepts",
            Self::PrefIgnored => "preferences declared but not transferred into the solution sets",
            Self::KneeMismatch => "knee region preferred but evaluated with IGD, GD or CI",
            Self::ExtremeMismatch => "extreme region preferred but evaluated with IGD",
        }
    }
}

impl fmt::Display for LintCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for LintCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for LintCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown lint code '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LintWarning {
    pub code: LintCode,
    pub severity: Severity,
    pub message: String,
    pub issue: Option<Issue>,
}

impl LintWarning {
    pub fn new(code: LintCode, message: impl Into<String>) -> Self {
        Self {
            code,
            severity: code.severity(),
            message: message.into(),
            issue: Some(code.issue()),
        }
    }
}

/// One row of the published code table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintCodeInfo {
    pub code: LintCode,
    pub issue: Issue,
    pub severity: Severity,
    pub summary: &'static str,
}

pub fn lint_code_table() -> Vec<LintCodeInfo> {
    LintCode::ALL
        .into_iter()
        .map(|code| LintCodeInfo {
            code,
            issue: code.issue(),
            severity: code.severity(),
            summary: code.summary(),
        })
        .collect()
}

/// How the evaluation is carried out, beyond the indicator list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LintContext {
    /// Steps the pipeline runs before indicators.
    pub preprocessing: Vec<PreprocessStep>,
    pub plotting: Option<PlotKind>,
    /// Descriptive statistics reported as comparisons.
    pub doe: Vec<DoeStat>,
    /// The IGD reference set is the combined front of the compared sets.
    pub combined_front_reference: bool,
    /// Nadir of the reference front, in the orientation of explicit
    /// reference points, when known.
    pub nadir: Option<Vec<f64>>,
}

impl Default for LintContext {
    fn default() -> Self {
        Self {
            preprocessing: Vec::new(),
            plotting: None,
            doe: Vec::new(),
            combined_front_reference: true,
            nadir: None,
        }
    }
}

/// Union of the aspects reflected by `chosen`, keeping the strongest level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct AspectCoverage {
    pub convergence: Level,
    pub spread: Level,
    pub uniformity: Level,
    pub cardinality: Level,
}

impl AspectCoverage {
    pub fn level(&self, aspect: Aspect) -> Level {
        match aspect {
            Aspect::Convergence => self.convergence,
            Aspect::Spread => self.spread,
            Aspect::Uniformity => self.uniformity,
            Aspect::Cardinality => self.cardinality,
        }
    }

    pub fn missing(&self) -> Vec<Aspect> {
        Aspect::ALL
            .into_iter()
            .filter(|&a| self.level(a) == Level::None)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing().is_empty()
    }
}

pub fn aspect_coverage(chosen: &[IndicatorName]) -> AspectCoverage {
    let mut c = AspectCoverage::default();
    for p in chosen.iter().map(|n| n.profile()) {
        c.convergence = c.convergence.max(p.convergence);
        c.spread = c.spread.max(p.spread);
        c.uniformity = c.uniformity.max(p.uniformity);
        c.cardinality = c.cardinality.max(p.cardinality);
    }
    c
}

/// [`aspect_coverage`] over free-form names.
pub fn aspect_coverage_of_names(names: &[&str]) -> crate::Result<AspectCoverage> {
    let parsed = names
        .iter()
        .map(|n| n.parse())
        .collect::<crate::Result<Vec<IndicatorName>>>()?;
    Ok(aspect_coverage(&parsed))
}

fn aspect_list(aspects: &[Aspect]) -> String {
    aspects
        .iter()
        .map(|a| match a {
            Aspect::Convergence => "convergence",
            Aspect::Spread => "spread",
            Aspect::Uniformity => "uniformity",
            Aspect::Cardinality => "cardinality",
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks an evaluation setup. The result is deterministic: rules run in a
/// fixed order and chosen indicators are visited in the given order.
pub fn lint<T: Scalar>(
    chosen: &[(IndicatorName, IndicatorConfig<T>)],
    prefs: &PreferenceSpec<T>,
    m: usize,
    ctx: &LintContext,
) -> Vec<LintWarning> {
    let mut out = Vec::new();
    let names: Vec<IndicatorName> = chosen.iter().map(|(n, _)| *n).collect();

    // Issue I
    if names.is_empty() && ctx.doe.is_empty() && ctx.plotting.is_some() {
        out.push(LintWarning::new(
            LintCode::SspOnly,
            "solution set plotting is the only evaluation method; add quality indicators",
        ));
    }
    if m > 3 && ctx.plotting == Some(PlotKind::Scatter) {
        out.push(LintWarning::new(
            LintCode::SspOnly,
            format!("scatter plots cannot show {m} objectives; use parallel coordinates"),
        ));
    }

    // Issue II
    let misleading: Vec<DoeStat> = ctx
        .doe
        .iter()
        .copied()
        .filter(|s| *s != DoeStat::Best)
        .collect();
    if names.is_empty() && !misleading.is_empty() {
        out.push(LintWarning::new(
            LintCode::DoeSole,
            format!(
                "{:?} objective statistics are the only comparison; they can favour a dominated set",
                misleading
            ),
        ));
    }

    // Issue III
    if prefs.is_empty() && !names.is_empty() {
        let missing = aspect_coverage(&names).missing();
        if !missing.is_empty() {
            out.push(LintWarning::new(
                LintCode::AspectGap,
                format!("no chosen indicator reflects {}", aspect_list(&missing)),
            ));
        }
    }
    for (name, config) in chosen {
        match name {
            IndicatorName::Spread if m != 2 => out.push(LintWarning::new(
                LintCode::SpreadDim,
                format!("Spread is only reliable with 2 objectives, found {m}; use DCI instead"),
            )),
            IndicatorName::Igd if ctx.combined_front_reference => out.push(LintWarning::new(
                LintCode::IgdRefset,
                "IGD needs a dense, uniform reference set; the combined front of the compared sets \
                 can reverse rankings",
            )),
            IndicatorName::Hv => {
                if m > MAX_HV_OBJECTIVES {
                    out.push(LintWarning::new(
                        LintCode::HvDim,
                        format!("exact HV supports at most {MAX_HV_OBJECTIVES} objectives, found {m}"),
                    ));
                }
                let at_nadir = match &config.hv_strategy {
                    ReferencePointStrategy::WorstValues => true,
                    ReferencePointStrategy::Explicit(r) => ctx.nadir.as_ref().is_some_and(|n| {
                        r.iter().zip(n).any(|(x, y)| x.as_f64() <= *y)
                    }),
                    _ => false,
                };
                if at_nadir {
                    out.push(LintWarning::new(
                        LintCode::HvRefpoint,
                        format!(
                            "HV reference point '{}' sits on the worst values or the nadir; boundary \
                             solutions get little or no credit",
                            config.hv_strategy.label()
                        ),
                    ));
                }
            }
            _ => {}
        }
    }

    // Issue IV
    if !prefs.clear.is_empty() && !ctx.preprocessing.contains(&PreprocessStep::ClearTransfer) {
        out.push(LintWarning::new(
            LintCode::PrefIgnored,
            "clear preferences are declared but not transferred into the solution sets",
        ));
    }
    if !prefs.vague.is_empty() && !ctx.preprocessing.contains(&PreprocessStep::VagueTransfer) {
        out.push(LintWarning::new(
            LintCode::PrefIgnored,
            "vague preferences are declared but not transferred into the solution sets",
        ));
    }

    // Issue V
    for name in &names {
        match (&prefs.roi, name) {
            (Roi::Knee, IndicatorName::Igd | IndicatorName::Gd | IndicatorName::Ci) => {
                out.push(LintWarning::new(
                    LintCode::KneeMismatch,
                    format!("{name} does not favour knee points; prefer HV"),
                ))
            }
            (Roi::Extreme(_), IndicatorName::Igd) => out.push(LintWarning::new(
                LintCode::ExtremeMismatch,
                "IGD does not favour extreme solutions; prefer HV with a distant reference point",
            )),
            _ => {}
        }
    }
    out
}

/// Highest severity present, if any.
pub fn max_severity(warnings: &[LintWarning]) -> Option<Severity> {
    warnings.iter().map(|w| w.severity).max()
}
