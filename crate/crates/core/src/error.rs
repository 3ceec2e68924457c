use thiserror::Error;

/// Errors raised by relations, preprocessing and indicator computation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} objectives, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("objective value {value} at position {index} is not finite")]
    NonFinite { index: usize, value: f64 },

    #[error("a solution needs at least one objective")]
    NoObjectives,

    #[error("solution set name must not be empty")]
    EmptyName,

    #[error("{0}: operation is undefined on an empty solution set")]
    EmptySet(&'static str),

    #[error("objective index {index} out of range for {m} objectives")]
    ObjectiveOutOfRange { index: usize, m: usize },

    #[error("invalid objective metadata for '{name}': {reason}")]
    InvalidMeta { name: String, reason: String },

    #[error("invalid preferences: {0}")]
    InvalidPreferences(String),

    #[error("inconsistent preferences: {0}")]
    InconsistentPreferences(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid indicator configuration: {0}")]
    InvalidConfig(String),

    #[error("{indicator} requires exactly 2 objectives, found {m} (only reliable on bi-objective problems)")]
    BiObjectiveOnly { indicator: &'static str, m: usize },

    #[error("{indicator} needs at least {needed} solutions, found {found}")]
    TooFewSolutions {
        indicator: &'static str,
        needed: usize,
        found: usize,
    },

    #[error("hypervolume is limited to {max} objectives, found {m}")]
    TooManyObjectives { m: usize, max: usize },

    #[error("degenerate bounds on objective {0}: lower equals upper")]
    DegenerateBounds(usize),

    #[error("unknown indicator '{0}'")]
    UnknownIndicator(String),

    #[error("indicator {0} cannot be evaluated on a single set")]
    NotUnary(String),

    #[error("indicator {0} does not compare two sets")]
    NotBinary(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
