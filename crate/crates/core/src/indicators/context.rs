//! Shared reference data for evaluating many sets under one configuration.

use super::cardinality::{nfs, unfr};
use super::catalog::IndicatorName;
use super::config::{digest_points, ConfigSnapshot, IndicatorConfig, IndicatorResult, NormalizationMode};
use super::convergence::{epsilon_additive, gd, gd_plus, igd, igd_plus};
use super::coverage::{contribution, coverage};
use super::diversity::{front_extremes, grid_diversity, spacing, spread_delta};
use super::hypervolume::hypervolume;
use crate::error::{Error, Result};
use crate::preprocess::{
    build_reference_point, build_reference_set, normalize, union_of, NormalizationBounds,
};
use crate::scalar::Scalar;
use crate::solution::SolutionSet;

const SPACING_FORMULA: &str = "schott: sample std-dev (n-1) of nearest-neighbour L1 distances";
const GRID_FORMULA: &str = "grid share: occupied cells / cells occupied by all sets";

/// Reference set, reference point and normalization bounds derived once
/// from a collection of sets, all in minimization orientation.
///
/// Sets passed to [`evaluate`](Self::evaluate) are raw; they are mapped into
/// the evaluation space with the same bounds.
#[derive(Debug, Clone)]
pub struct EvaluationContext<T: Scalar> {
    config: IndicatorConfig<T>,
    bounds: Option<NormalizationBounds<T>>,
    reference_set: SolutionSet<T>,
    reference_digest: String,
    reference_point: Vec<T>,
    extremes: Option<(Vec<T>, Vec<T>)>,
    peers: Vec<SolutionSet<T>>,
    grid_bounds: Option<NormalizationBounds<T>>,
    warnings: Vec<String>,
}

impl<T: Scalar> EvaluationContext<T> {
    /// Builds the context from every set taking part in the comparison.
    pub fn build(sets: &[SolutionSet<T>], config: &IndicatorConfig<T>) -> Result<Self> {
        config.validate()?;
        let union = union_of(sets)?;
        if union.is_empty() {
            return Err(Error::EmptySet("evaluation context"));
        }
        let mut warnings = Vec::new();
        let raw_reference = build_reference_set(sets)?;
        let bounds = match config.normalization {
            NormalizationMode::CombinedFront => Some(NormalizationBounds::combined_front(sets)?),
            NormalizationMode::HardBounds => Some(NormalizationBounds::from_hard_bounds(union.meta())?),
            NormalizationMode::NoNormalization => None,
        };
        let raw_point = build_reference_point(&union, &config.hv_strategy)?;
        warnings.extend(raw_point.warnings);

        let (reference_set, reference_point, peers) = match &bounds {
            Some(b) => {
                let mapped = normalize(sets, b)?;
                warnings.extend(mapped.warnings);
                let reference = normalize(std::slice::from_ref(&raw_reference), b)?
                    .value
                    .remove(0);
                let mut point = b.apply(&raw_point.value);
                for (i, v) in point.iter_mut().enumerate() {
                    if b.is_degenerate(i) {
                        *v = T::one();
                    }
                }
                (reference, point, mapped.value)
            }
            None => (raw_reference, raw_point.value, sets.to_vec()),
        };
        let extremes = if reference_set.m() == 2 {
            Some(front_extremes(&reference_set)?)
        } else {
            None
        };
        let grid_bounds = NormalizationBounds::combined_front(&peers).ok();
        Ok(Self {
            config: config.clone(),
            bounds,
            reference_digest: digest_points(&reference_set),
            reference_set,
            reference_point,
            extremes,
            peers,
            grid_bounds,
            warnings,
        })
    }

    pub fn config(&self) -> &IndicatorConfig<T> {
        &self.config
    }

    pub fn bounds(&self) -> Option<&NormalizationBounds<T>> {
        self.bounds.as_ref()
    }

    /// Combined unique nondominated front, in the evaluation space.
    pub fn reference_set(&self) -> &SolutionSet<T> {
        &self.reference_set
    }

    /// Hypervolume reference point, in the evaluation space.
    pub fn reference_point(&self) -> &[T] {
        &self.reference_point
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Maps a raw set into the evaluation space.
    pub fn prepare(&self, set: &SolutionSet<T>) -> Result<SolutionSet<T>> {
        match &self.bounds {
            Some(b) => Ok(normalize(std::slice::from_ref(set), b)?.value.remove(0)),
            None => Ok(set.clone()),
        }
    }

    fn snapshot(&self) -> ConfigSnapshot<T> {
        let mut s = ConfigSnapshot::bare(self.config.clone());
        s.normalization_bounds = self.bounds.clone();
        s
    }

    fn with_reference(&self, mut s: ConfigSnapshot<T>) -> ConfigSnapshot<T> {
        s.reference_set_size = Some(self.reference_set.len());
        s.reference_set_digest = Some(self.reference_digest.clone());
        s
    }

    /// Value of a unary-evaluable indicator for one raw set.
    pub fn evaluate(&self, name: IndicatorName, set: &SolutionSet<T>) -> Result<IndicatorResult<T>> {
        let a = self.prepare(set)?;
        let r = &self.reference_set;
        let mut snap = self.snapshot();
        let value = match name {
            IndicatorName::Ci | IndicatorName::C => {
                return Err(Error::NotUnary(name.to_string()));
            }
            IndicatorName::Gd => {
                snap = self.with_reference(snap);
                gd(&a, r, self.config.gd_p)?
            }
            IndicatorName::GdPlus => {
                snap = self.with_reference(snap);
                gd_plus(&a, r)?
            }
            IndicatorName::Igd => {
                snap = self.with_reference(snap);
                igd(&a, r)?
            }
            IndicatorName::IgdPlus => {
                snap = self.with_reference(snap);
                igd_plus(&a, r)?
            }
            IndicatorName::Epsilon => {
                snap = self.with_reference(snap);
                epsilon_additive(&a, r)?
            }
            IndicatorName::Hv => {
                snap.reference_point = Some(self.reference_point.clone());
                snap.formula = Some(format!("reference point: {}", self.config.hv_strategy.label()));
                hypervolume(&a, &self.reference_point)?
            }
            IndicatorName::Spread => {
                let (e0, e1) = self.extremes.as_ref().ok_or(Error::BiObjectiveOnly {
                    indicator: "Spread",
                    m: a.m(),
                })?;
                snap = self.with_reference(snap);
                snap.formula = Some("extremes taken from the combined front".into());
                spread_delta(&a, (e0, e1))?
            }
            IndicatorName::Sp => {
                snap.formula = Some(SPACING_FORMULA.into());
                spacing(&a)?
            }
            IndicatorName::Nfs => T::from_count(nfs(&a)),
            IndicatorName::Unfr => {
                snap = self.with_reference(snap);
                unfr(&a, &self.peers)?
            }
            IndicatorName::GridDiversity => {
                let gb = self
                    .grid_bounds
                    .as_ref()
                    .ok_or(Error::EmptySet("grid_diversity"))?;
                snap.formula = Some(GRID_FORMULA.into());
                let mut all = Vec::with_capacity(self.peers.len() + 1);
                all.push(a);
                all.extend(self.peers.iter().cloned());
                grid_diversity(&all, self.config.grid_divisions, gb)?[0]
            }
        };
        Ok(IndicatorResult::new(name, value, snap))
    }

    /// Value of a binary indicator for the ordered pair `(a, b)`.
    pub fn compare(
        &self,
        name: IndicatorName,
        a: &SolutionSet<T>,
        b: &SolutionSet<T>,
    ) -> Result<IndicatorResult<T>> {
        let (na, nb) = (self.prepare(a)?, self.prepare(b)?);
        let value = match name {
            IndicatorName::Ci => contribution(&na, &nb)?,
            IndicatorName::C => coverage(&na, &nb)?,
            IndicatorName::Epsilon => epsilon_additive(&na, &nb)?,
            _ => return Err(Error::NotBinary(name.to_string())),
        };
        let mut snap = self.snapshot();
        snap.opponent = Some(b.name().to_owned());
        Ok(IndicatorResult::new(name, value, snap))
    }
}
