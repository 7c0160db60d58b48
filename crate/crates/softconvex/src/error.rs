use thiserror::Error;

use crate::report::ValidationReport;

/// Errors produced by space construction, soft-set algebra, operator tables,
/// and the structure/base/operator constructors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must be nonempty")]
    EmptyUniverse,

    #[error("parameter list must be nonempty")]
    EmptyParameters,

    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("assignment is missing parameter `{0}`")]
    MissingParameter(String),

    #[error("parameter `{0}` assigned more than once")]
    DuplicateParameter(String),

    #[error("operands live on different spaces")]
    SpaceMismatch,

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("operator table incomplete: expected {expected} entries, got {got}")]
    TableIncomplete { expected: u64, got: u64 },

    #[error("operator is not a soft hull operator:\n{0}")]
    InvalidOperator(Box<ValidationReport>),

    #[error("family is not a soft convex structure:\n{0}")]
    InvalidStructure(Box<ValidationReport>),

    #[error("family is not a soft convex base:\n{0}")]
    InvalidBase(Box<ValidationReport>),
}

impl Error {
    /// The validation report attached to an `Invalid*` error, if any.
    pub fn report(&self) -> Option<&ValidationReport> {
        match self {
            Error::InvalidOperator(r) | Error::InvalidStructure(r) | Error::InvalidBase(r) => {
                Some(r)
            }
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
