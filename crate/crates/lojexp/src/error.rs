use thiserror::Error;

/// Errors surfaced by the engine. The CLI maps `InvalidInput` to exit code 2,
/// the unsupported-dimension/mode variants to exit code 3, and anything else
/// to exit code 1.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0} (exact hull enumeration is guaranteed for n <= 4)")]
    UnsupportedDimension(usize),

    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),

    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),

    #[error("power exponent {got} exceeds cap {cap}")]
    PowerCapExceeded { got: u32, cap: u32 },

    #[error("linear region is empty/infeasible")]
    InfeasibleRegion,

    #[error("colength interpolation window unstable after retries (last n0 = {0})")]
    InterpolationUnstable(i64),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
