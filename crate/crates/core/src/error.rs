use thiserror::Error;

/// Errors raised by the table builders and the series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A requested enumeration exceeds its configured bound.
    #[error("enumeration limit exceeded for {what}: requested {requested}, cap is {cap}")]
    EnumerationLimit {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    /// Two operands do not live in compatible shapes (truncation orders, lengths).
    #[error("shape mismatch: {0}")]
    Mismatch(String),

    /// Series inversion was asked for a series whose constant term is not a unit.
    #[error("constant term {0} is not a unit")]
    NotInvertible(String),

    /// A class-wise average failed to cancel to an integer.
    #[error("average is not integral: {numerator} / {denominator}")]
    NonIntegral {
        numerator: String,
        denominator: String,
    },

    /// An argument lies outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed input data (JSON payloads, partitions, group elements).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
