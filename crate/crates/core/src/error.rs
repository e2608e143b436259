use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be between 1 and {max}, got {got}")]
    InvalidDimension { got: usize, max: usize },
    #[error("inner radius must satisfy 0 <= r < 1, got {0}")]
    InvalidRadius(f64),
    #[error("alpha must satisfy 0 < alpha < 1, got {0}")]
    InvalidAlpha(f64),
    #[error("the prior bound g needs 0 < r < 1, got r = {0}")]
    RadiusZeroForG(f64),
    #[error("point coordinates must be finite and nonempty")]
    InvalidPoint,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("tolerance {0} outside [1e-12, 1e-6]")]
    InvalidTolerance(f64),
    #[error("t = {t} outside [{r}, 1]")]
    OutOfRange { t: f64, r: f64 },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("empty input")]
    EmptyInput,
    #[error("simplex did not terminate within {0} pivots")]
    IterationLimit(usize),
    #[error("work estimate {requested} exceeds the cap of {cap} units")]
    ResourceCap { requested: u128, cap: u128 },
    #[error("no admissible n: bound f = {0} is below 2")]
    NoAdmissibleN(f64),
    #[error("failed to build worker pool: {0}")]
    WorkerPool(String),
}
