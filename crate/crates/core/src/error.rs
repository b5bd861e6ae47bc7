use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidLetterOutOfRange { letter: i64, strands: usize },

    #[error("invalid fraction: 0/0")]
    ZeroFraction,

    #[error("pd code invalid: {0}")]
    InvalidPd(String),

    #[error("unknown catalog key: {0}")]
    UnknownNamedLink(String),

    #[error("crossing limit exceeded: {crossings} crossings with limit {limit}")]
    LimitExceeded { crossings: usize, limit: usize },

    #[error("move site invalid: {0}")]
    InvalidSite(String),

    #[error("variable role mismatch: expected {expected}, got {got}")]
    RoleMismatch { expected: String, got: String },

    #[error("unassigned variable: {0}")]
    UnassignedVariable(String),

    #[error("element not invertible: {0}")]
    NotInvertible(String),

    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),

    #[error("{0}")]
    Invalid(String),
}
