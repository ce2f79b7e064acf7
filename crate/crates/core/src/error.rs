use thiserror::Error;

/// Every failure the engine can report.
///
/// Arithmetic and comparison helpers never return a silent placeholder for an
/// undefined case; they raise one of these instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed name {input:?}: unexpected {token:?}")]
    MalformedName { input: String, token: String },

    #[error("undefined difference: {lhs} - {rhs}")]
    UndefinedDifference { lhs: String, rhs: String },

    #[error("undefined quotient: {lhs} / {rhs}")]
    UndefinedQuotient { lhs: String, rhs: String },

    #[error("division by zero: {lhs} / 0")]
    DivisionByZero { lhs: String },

    #[error("0 has no predecessor")]
    NoPredecessor,

    #[error("{0} is not representable as a binary digit pattern")]
    NotRepresentable(String),

    #[error("invalid set: element {0:?} listed more than once")]
    InvalidSet(String),

    #[error("{x} is not in landmark class o_{index}")]
    WrongClass { index: u64, x: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no limit rule for {family} over {domain}")]
    UnsupportedLimit { family: String, domain: String },

    #[error("requested {requested} terms, at most {max} allowed")]
    BoundExceeded { requested: u64, max: u64 },

    #[error("malformed layout: {0}")]
    MalformedLayout(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
