use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A gap set that cannot be the gap set of a numerical semigroup.
    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),
    /// A prefix set (A; k) violating one of its defining constraints.
    #[error("invalid prefix set: {0}")]
    InvalidPrefixSet(String),
    /// A construction parameter outside its admissible range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    /// A type was requested for a semigroup whose Frobenius number does not
    /// lie strictly between twice and three times the multiplicity.
    #[error("semigroup is not of class 2m < f < 3m (f = {frobenius}, m = {multiplicity})")]
    WrongClass { frobenius: i64, multiplicity: u64 },
    /// A request whose enumeration cost exceeds the configured ceiling.
    #[error("enumeration too large: {what} {requested} exceeds ceiling {ceiling} (lift the resource limits to proceed)")]
    EnumerationTooLarge {
        what: &'static str,
        requested: u64,
        ceiling: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
