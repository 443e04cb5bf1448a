use thiserror::Error;

/// Errors raised by the transform, filter and approximation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SaftError {
    #[error("NotUnimodular: AD - BC = {det} (must equal 1 within 1e-12)")]
    NotUnimodular { det: f64 },

    #[error("NonpositiveB: B = {b} (must be > 0)")]
    NonpositiveB { b: f64 },

    #[error("EdgeMassTooLarge: |f| at the grid edge is {ratio:e} of its maximum (limit {limit:e})")]
    EdgeMassTooLarge { ratio: f64, limit: f64 },

    #[error("ZeroScale: dilation factor must be nonzero")]
    ZeroScale,

    #[error("PeriodMismatch: samples taken with period {samples}, band limit implies {expected}")]
    PeriodMismatch { samples: f64, expected: f64 },

    #[error("IndexOutOfRange: basis index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("SingularSystem: {0}")]
    SingularSystem(String),

    #[error("ConditionTooLarge: condition estimate {estimate:e} exceeds {bound:e}")]
    ConditionTooLarge { estimate: f64, bound: f64 },

    #[error("InvalidGrid: {0}")]
    InvalidGrid(String),

    #[error("LengthMismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("NonFinite: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, SaftError>;
