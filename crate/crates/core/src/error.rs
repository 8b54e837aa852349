use thiserror::Error;

/// Errors raised across the lab.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("divisor series has a zero constant term")]
    ZeroConstantTerm,

    #[error("inner series of a composition must vanish at 0 (got constant {0})")]
    NonzeroInnerConstant(String),

    #[error("series must vanish at 0 (got constant {0})")]
    NonzeroConstant(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("no inverse available for {0}")]
    NoInverseAvailable(String),

    #[error("series is not normalized as z + b2 z^2 + ...: {0}")]
    NotNormalized(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("certification failed for {family}: gap t22 = {gap_t22:e}, gap t31 = {gap_t31:e}")]
    CertificationFailed {
        family: String,
        gap_t22: f64,
        gap_t31: f64,
    },

    #[error("theorem hypothesis does not hold: {0}")]
    ConditionNotMet(String),

    #[error("could not parse {what}: {detail}")]
    Parse { what: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
