use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid seed {seed} for {kind}: {reason}")]
    InvalidSeed {
        kind: &'static str,
        seed: u32,
        reason: &'static str,
    },
    #[error("argument outside the function's domain: {0}")]
    Domain(String),
    #[error("empty sample")]
    EmptySample,
    #[error("sample value {value} at index {index} lies outside [0, 1]")]
    OutOfRangeSample { index: usize, value: f64 },
    #[error("non-finite sample value at index {0}")]
    NonFiniteSample(usize),
    #[error("insufficient sample: {0}")]
    InsufficientSample(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("zero variance in {0}")]
    ZeroVariance(&'static str),
    #[error("sample of size {n} is too small; at least {min} required")]
    SampleTooSmall { n: u64, min: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("requested {requested} draws exceed the period budget ({rules})")]
    BudgetExceeded { requested: u64, rules: String },
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("manifest: {0}")]
    Manifest(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
