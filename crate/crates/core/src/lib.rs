pub mod doe;
pub mod dominance;
pub mod error;
pub mod guidance;
pub mod indicators;
pub mod pipeline;
pub mod preprocess;
pub mod scalar;
pub mod solution;

pub use dominance::*;
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use solution::{default_meta, Direction, ObjectiveMeta, Solution, SolutionSet};

pub type Solution64 = Solution<f64>;
pub type Solution32 = Solution<f32>;
pub type SolutionSet64 = SolutionSet<f64>;
pub type SolutionSet32 = SolutionSet<f32>;
pub type ObjectiveMeta64 = ObjectiveMeta<f64>;
pub type ObjectiveMeta32 = ObjectiveMeta<f32>;
pub type PreferenceSpec64 = preprocess::PreferenceSpec<f64>;
pub type PreferenceSpec32 = preprocess::PreferenceSpec<f32>;
pub type IndicatorConfig64 = indicators::IndicatorConfig<f64>;
pub type IndicatorConfig32 = indicators::IndicatorConfig<f32>;
pub type EvaluationReport64 = pipeline::EvaluationReport<f64>;
pub type EvaluationReport32 = pipeline::EvaluationReport<f32>;
