//! Indicator parameters and result records.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::catalog::{Aspect, Better, IndicatorName, Level};
use crate::error::{Error, Result};
use crate::preprocess::{NormalizationBounds, ReferencePointStrategy};
use crate::scalar::Scalar;
use crate::solution::SolutionSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationMode {
    /// Ideal and nadir of the combined unique nondominated front.
    #[default]
    CombinedFront,
    /// Declared per-objective hard bounds.
    HardBounds,
    /// Raw values, e.g. to reproduce worked examples.
    NoNormalization,
}

/// Parameters shared by every indicator of an evaluation.
///
/// An `Explicit` reference point is given in minimization orientation and
/// raw (unnormalized) units; it is mapped with the same bounds as the data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, bound(deserialize = "T: Scalar"))]
pub struct IndicatorConfig<T> {
    pub gd_p: T,
    pub hv_strategy: ReferencePointStrategy<T>,
    pub grid_divisions: usize,
    pub normalization: NormalizationMode,
}

impl<T: Scalar> Default for IndicatorConfig<T> {
    fn default() -> Self {
        Self {
            gd_p: T::one(),
            hv_strategy: ReferencePointStrategy::NadirPlusTenth,
            grid_divisions: 10,
            normalization: NormalizationMode::CombinedFront,
        }
    }
}

impl<T: Scalar> IndicatorConfig<T> {
    // negated comparisons also reject NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if !(self.gd_p >= T::one()) || !self.gd_p.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "gd_p must be a finite value >= 1, got {}",
                self.gd_p
            )));
        }
        if self.grid_divisions < 2 {
            return Err(Error::InvalidConfig(format!(
                "grid_divisions must be at least 2, got {}",
                self.grid_divisions
            )));
        }
        if let ReferencePointStrategy::Explicit(r) = &self.hv_strategy {
            if r.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidConfig("explicit reference point must be finite".into()));
            }
        }
        Ok(())
    }
}

/// Everything needed to recompute an indicator value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct ConfigSnapshot<T> {
    pub config: IndicatorConfig<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization_bounds: Option<NormalizationBounds<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_set_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_set_digest: Option<String>,
    /// In the space the indicator was computed in.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_point: Option<Vec<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opponent: Option<String>,
}

impl<T: Scalar> ConfigSnapshot<T> {
    pub fn bare(config: IndicatorConfig<T>) -> Self {
        Self {
            config,
            normalization_bounds: None,
            reference_set_size: None,
            reference_set_digest: None,
            reference_point: None,
            formula: None,
            opponent: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Scalar"))]
pub struct IndicatorResult<T> {
    pub indicator: IndicatorName,
    pub value: T,
    pub better: Better,
    /// Aspects the indicator reflects, with their level.
    pub aspects: Vec<(Aspect, Level)>,
    pub config_snapshot: ConfigSnapshot<T>,
}

impl<T: Scalar> IndicatorResult<T> {
    pub fn new(indicator: IndicatorName, value: T, config_snapshot: ConfigSnapshot<T>) -> Self {
        let profile = indicator.profile();
        Self {
            indicator,
            value,
            better: profile.better,
            aspects: Aspect::ALL
                .iter()
                .map(|&a| (a, profile.level(a)))
                .filter(|&(_, l)| l != Level::None)
                .collect(),
            config_snapshot,
        }
    }
}

/// SHA-256 of the objective vectors of `set`, in order, as lowercase hex.
/// Values are hashed as `f64` bit patterns so the digest is independent of
/// decimal formatting.
pub fn digest_points<T: Scalar>(set: &SolutionSet<T>) -> String {
    let mut h = Sha256::new();
    h.update((set.m() as u64).to_le_bytes());
    h.update((set.len() as u64).to_le_bytes());
    for p in set.iter() {
        for v in p {
            h.update(v.as_f64().to_bits().to_le_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}
