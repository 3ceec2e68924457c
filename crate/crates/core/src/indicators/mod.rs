//! Quality indicators. Every function assumes minimization orientation;
//! distance-based indicators expect normalized values unless raw numbers
//! are wanted on purpose.

mod cardinality;
mod catalog;
mod config;
mod context;
mod convergence;
mod coverage;
mod diversity;
mod hypervolume;

pub use cardinality::{nfs, unfr};
pub use catalog::{
    aspects_of, aspects_of_name, Aspect, Better, Compliance, IndicatorName, IndicatorProfile, Level,
};
pub use config::{digest_points, ConfigSnapshot, IndicatorConfig, IndicatorResult, NormalizationMode};
pub use context::EvaluationContext;
pub use convergence::{epsilon_additive, gd, gd_plus, igd, igd_plus};
pub use coverage::{contribution, coverage};
pub use diversity::{front_extremes, grid_diversity, spacing, spread_delta};
pub use hypervolume::{hypervolume, MAX_HV_OBJECTIVES};
