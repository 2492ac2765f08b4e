use crate::sat::FragmentTag;
use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),

    /// A world or evaluation was asked about a variable outside its domain.
    #[error("variable `{0}` is not declared in this domain")]
    UndeclaredVariable(String),

    /// A forcing set contained a literal and its negation.
    #[error("literal set contains both `{0}` and its negation")]
    InconsistentLiterals(String),

    /// A DNF operation received a term containing a literal and its negation.
    #[error("term `{0}` is inconsistent")]
    InconsistentTerm(String),

    /// Brute-force enumeration refused to run; the cap is never exceeded silently.
    #[error("brute-force enumeration over {vars} variables exceeds the cap of {cap}")]
    CapExceeded { vars: usize, cap: usize },

    /// An intermediate or final result grew past the configured size limit.
    /// No partial result is returned.
    #[error("result of size {size} exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    /// A fragment fast path was handed a clause set that does not satisfy the tag.
    #[error("clause set is not in the `{0}` fragment")]
    Misclassified(FragmentTag),

    /// The requested forgetting strategy does not apply to the given input.
    #[error("strategy not applicable: {0}")]
    InvalidStrategy(String),

    /// The minimized/fixed/varying sets are not a partition of the query variables.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("DIMACS error at line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

/// A syntax error in formula text, with the byte offset of the failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
