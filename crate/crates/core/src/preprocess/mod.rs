//! Everything upstream of indicator computation: orientation, screening,
//! preference transfer, normalization and reference construction.

mod normalize;
mod prefs;
mod reference;
mod transfer;

pub use normalize::{normalize, BoundsSource, NormalizationBounds};
pub use prefs::{ClearConstraint, ClearKind, PreferenceSpec, Roi, VagueClamp};
pub use reference::{build_reference_point, build_reference_set, compute_h, ReferencePointStrategy};
pub use transfer::{
    apply_clear_preferences, apply_vague_preferences, restore_orientation, screen_trivial,
    to_minimization, ClampOutcome, FilterOutcome, Removal,
};

pub(crate) use normalize::union_of;
pub(crate) use prefs::validate_weights;

/// A value plus the non-fatal warnings produced while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Flagged<V> {
    pub value: V,
    pub warnings: Vec<String>,
}

impl<V> Flagged<V> {
    pub fn new(value: V, warnings: Vec<String>) -> Self {
        Self { value, warnings }
    }
}
