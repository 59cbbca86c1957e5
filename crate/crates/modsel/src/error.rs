use thiserror::Error;

/// Errors reported by input validation and path queries.
///
/// Indices in error payloads are 0-based positions into the offending slice.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("losses must be strictly decreasing; first violation at index {index}")]
    NotStrictlyDecreasing { index: usize },

    #[error("complexities must be strictly increasing; first violation at index {index}")]
    ComplexityNotIncreasing { index: usize },

    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("cost lines do not cross at a positive penalty (complexity gap must be positive)")]
    DegenerateCrossing,

    #[error("penalty must be finite and >= 0")]
    NegativePenalty,

    #[error("penalty grid is empty")]
    EmptyGrid,

    #[error("penalty grid must be strictly increasing; first violation at index {index}")]
    UnsortedGrid { index: usize },

    #[error("cannot build a penalty grid for a single-model sequence")]
    DegenerateRange,

    #[error("max_models must be in [1, {len}], got {max_models}")]
    MaxModelsOutOfRange { max_models: usize, len: usize },

    #[error("interval set is empty")]
    EmptyIntervalSet,
}

pub type Result<T> = std::result::Result<T, Error>;
