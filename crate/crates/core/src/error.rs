use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid Groebner basis: property {property} fails at entry ({row}, {col})")]
    InvalidBasis { property: u8, row: usize, col: usize },
    #[error("index {0} is not an eigenvalue index of the code")]
    NotAnEigenvalue(usize),
    #[error("invalid bound parameters: {0}")]
    InvalidBoundParams(String),
    #[error("bound not applicable: {0}")]
    BoundNotApplicable(String),
    #[error("invalid decoder configuration: {0}")]
    InvalidConfig(String),
    #[error("error evaluation inconsistent: {0}")]
    EvaluationInconsistent(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("leading parity-check block is singular")]
    SingularLeadBlock,
    #[error("message weight {weight} exceeds the public bound {max}")]
    WeightTooLarge { weight: usize, max: usize },
    #[error("decryption failure: {0}")]
    DecryptionFailure(String),
    #[error("key generation gave up after {attempts} attempts: {reason}")]
    KeygenRetryExhausted { attempts: usize, reason: String },
    #[error("oracle budget exceeded: {needed} words needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Stable snake_case name of the variant, for structured reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::FieldMismatch => "field_mismatch",
            Error::UnsupportedParameters(_) => "unsupported_parameters",
            Error::Shape(_) => "shape",
            Error::InvalidBasis { .. } => "invalid_basis",
            Error::NotAnEigenvalue(_) => "not_an_eigenvalue",
            Error::InvalidBoundParams(_) => "invalid_bound_params",
            Error::BoundNotApplicable(_) => "bound_not_applicable",
            Error::InvalidConfig(_) => "invalid_config",
            Error::EvaluationInconsistent(_) => "evaluation_inconsistent",
            Error::SingularMatrix => "singular_matrix",
            Error::SingularLeadBlock => "singular_lead_block",
            Error::WeightTooLarge { .. } => "weight_too_large",
            Error::DecryptionFailure(_) => "decryption_failure",
            Error::KeygenRetryExhausted { .. } => "keygen_retry_exhausted",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Format(_) => "format",
        }
    }
}
