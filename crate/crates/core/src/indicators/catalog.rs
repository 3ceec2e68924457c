//! Indicator names and the quality-aspect profile of each indicator.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndicatorName {
    /// Contribution indicator.
    Ci,
    /// Coverage (C-metric).
    C,
    Gd,
    GdPlus,
    Igd,
    IgdPlus,
    /// Spread (Δ), bi-objective only.
    Spread,
    /// Grid-based diversity (region-division surrogate for DCI).
    GridDiversity,
    /// Spacing.
    Sp,
    /// Nondominated front size.
    Nfs,
    /// Unique nondominated front ratio.
    Unfr,
    Hv,
    Epsilon,
}

impl IndicatorName {
    pub const ALL: [IndicatorName; 13] = [
        Self::Ci,
        Self::C,
        Self::Gd,
        Self::GdPlus,
        Self::Igd,
        Self::IgdPlus,
        Self::Spread,
        Self::GridDiversity,
        Self::Sp,
        Self::Nfs,
        Self::Unfr,
        Self::Hv,
        Self::Epsilon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ci => "CI",
            Self::C => "C",
            Self::Gd => "GD",
            Self::GdPlus => "GD+",
            Self::Igd => "IGD",
            Self::IgdPlus => "IGD+",
            Self::Spread => "Spread",
            Self::GridDiversity => "DCI",
            Self::Sp => "SP",
            Self::Nfs => "NFS",
            Self::Unfr => "UNFR",
            Self::Hv => "HV",
            Self::Epsilon => "EPS",
        }
    }

    /// Whether a value can be attached to one set given shared reference
    /// data (reference set, reference point, the other sets).
    pub fn is_unary(self) -> bool {
        !matches!(self, Self::Ci | Self::C)
    }

    /// Whether the indicator directly compares two sets.
    pub fn is_binary(self) -> bool {
        matches!(self, Self::Ci | Self::C | Self::Epsilon)
    }

    pub fn profile(self) -> IndicatorProfile {
        aspects_of(self)
    }
}

impl fmt::Display for IndicatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndicatorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-', ' '], "");
        Ok(match key.as_str() {
            "ci" | "contribution" => Self::Ci,
            "c" | "cs" | "cmetric" | "coverage" => Self::C,
            "gd" => Self::Gd,
            "gd+" | "gdplus" => Self::GdPlus,
            "igd" => Self::Igd,
            "igd+" | "igdplus" => Self::IgdPlus,
            "spread" | "delta" | "δ" | "Δ" => Self::Spread,
            "dci" | "grid" | "griddiversity" => Self::GridDiversity,
            "sp" | "spacing" => Self::Sp,
            "nfs" | "pfs" => Self::Nfs,
            "unfr" => Self::Unfr,
            "hv" | "hypervolume" => Self::Hv,
            "eps" | "epsilon" | "ε" | "epsilonadditive" => Self::Epsilon,
            _ => return Err(Error::UnknownIndicator(s.to_owned())),
        })
    }
}

impl Serialize for IndicatorName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for IndicatorName {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How well an indicator reflects one quality aspect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    #[default]
    None,
    /// Reflected to some extent.
    Partial,
    Full,
}

impl Level {
    pub fn symbol(self) -> &'static str {
        match self {
            Self::None => " ",
            Self::Partial => "-",
            Self::Full => "+",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Compliance {
    Yes,
    No,
    /// Holds under certain conditions.
    Conditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Better {
    Higher,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Aspect {
    Convergence,
    Spread,
    Uniformity,
    Cardinality,
}

impl Aspect {
    pub const ALL: [Aspect; 4] = [Self::Convergence, Self::Spread, Self::Uniformity, Self::Cardinality];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndicatorProfile {
    pub convergence: Level,
    pub spread: Level,
    pub uniformity: Level,
    pub cardinality: Level,
    pub compliance: Compliance,
    pub better: Better,
    pub needs_normalization: bool,
}

impl IndicatorProfile {
    pub fn level(&self, aspect: Aspect) -> Level {
        match aspect {
            Aspect::Convergence => self.convergence,
            Aspect::Spread => self.spread,
            Aspect::Uniformity => self.uniformity,
            Aspect::Cardinality => self.cardinality,
        }
    }

    pub fn is_pareto_compliant(&self) -> bool {
        self.compliance == Compliance::Yes
    }
}

/// Row of the indicator summary table: covered aspects, Pareto compliance,
/// preferred direction and whether objectives must be normalized first.
pub fn aspects_of(name: IndicatorName) -> IndicatorProfile {
    use Level::{Full as F, None as N, Partial as P};
    let row = |c, s, u, k, compliance, better, needs_normalization| IndicatorProfile {
        convergence: c,
        spread: s,
        uniformity: u,
        cardinality: k,
        compliance,
        better,
        needs_normalization,
    };
    match name {
        IndicatorName::Ci => row(P, N, N, P, Compliance::Yes, Better::Higher, false),
        IndicatorName::C => row(P, N, N, P, Compliance::Yes, Better::Higher, false),
        IndicatorName::Gd => row(F, N, N, N, Compliance::No, Better::Lower, true),
        IndicatorName::GdPlus => row(F, N, N, N, Compliance::Yes, Better::Lower, true),
        IndicatorName::Spread => row(N, F, F, N, Compliance::No, Better::Lower, true),
        IndicatorName::GridDiversity => row(N, F, P, P, Compliance::Conditional, Better::Higher, true),
        IndicatorName::Sp => row(N, N, F, N, Compliance::No, Better::Lower, true),
        IndicatorName::Nfs => row(N, N, N, F, Compliance::No, Better::Higher, false),
        IndicatorName::Unfr => row(N, N, N, F, Compliance::Yes, Better::Higher, false),
        IndicatorName::Igd => row(F, F, P, P, Compliance::No, Better::Lower, true),
        // IGD with the superiority distance: same aspects, weakly compliant.
        IndicatorName::IgdPlus => row(F, F, P, P, Compliance::Yes, Better::Lower, true),
        IndicatorName::Hv => row(F, F, P, F, Compliance::Yes, Better::Higher, false),
        IndicatorName::Epsilon => row(F, F, P, P, Compliance::Yes, Better::Lower, true),
    }
}

/// [`aspects_of`] keyed by a free-form indicator name.
pub fn aspects_of_name(name: &str) -> Result<IndicatorProfile> {
    Ok(aspects_of(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_rows() {
        let hv = aspects_of(IndicatorName::Hv);
        assert_eq!(
            [hv.convergence, hv.spread, hv.uniformity, hv.cardinality],
            [Level::Full, Level::Full, Level::Partial, Level::Full]
        );
        assert!(hv.is_pareto_compliant());

        let sp = aspects_of(IndicatorName::Sp);
        assert_eq!(
            [sp.convergence, sp.spread, sp.uniformity, sp.cardinality],
            [Level::None, Level::None, Level::Full, Level::None]
        );
        assert!(!sp.is_pareto_compliant());

        let unfr = aspects_of_name("UNFR").unwrap();
        assert_eq!(unfr.cardinality, Level::Full);
        assert_eq!(unfr.convergence, Level::None);
        assert!(unfr.is_pareto_compliant());

        assert!(!aspects_of(IndicatorName::Gd).is_pareto_compliant());
        assert!(aspects_of(IndicatorName::GdPlus).is_pareto_compliant());
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(aspects_of_name("R2"), Err(Error::UnknownIndicator(_))));
    }

    #[test]
    fn names_round_trip() {
        for n in IndicatorName::ALL {
            assert_eq!(n.as_str().parse::<IndicatorName>().unwrap(), n);
        }
        assert_eq!("gd_plus".parse::<IndicatorName>().unwrap(), IndicatorName::GdPlus);
        assert_eq!("Delta".parse::<IndicatorName>().unwrap(), IndicatorName::Spread);
    }
}
