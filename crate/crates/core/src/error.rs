use thiserror::Error;

/// Errors produced while parsing, validating or solving an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("schema violation at `{path}`: {message}")]
    SchemaViolation { path: String, message: String },

    /// `index` is the 1-based `i` of the first pair with `x(i) > x(i+1)`.
    #[error("coordinates are not nondecreasing: x({index}) > x({})", index + 1)]
    UnsortedCoordinates { index: usize },

    #[error("k = {k} is outside [1, {n}]")]
    BadK { k: usize, n: usize },

    #[error("node {index} has negative weight")]
    NegativeWeight { index: usize },

    #[error("position {position} is outside [1, {n}]")]
    OutOfRange { position: usize, n: usize },

    #[error("position {position} belongs to more than one pair")]
    PositionReused { position: usize },

    #[error("pairs ({}, {}) and ({}, {}) cross", first.0, first.1, second.0, second.1)]
    CrossingPairs {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("packet {position} has type {ty}, expected a value in [1, {num_types}]")]
    BadType {
        position: usize,
        ty: usize,
        num_types: usize,
    },

    #[error("the packet sequence is empty")]
    EmptySequence,

    #[error("path {index} has a negative parameter")]
    NegativePathParameter { index: usize },

    #[error("packet count {0} is negative")]
    NegativePacketCount(i64),

    #[error("q = {q} is outside [1, {p}]")]
    BadQ { q: usize, p: usize },

    #[error("instance exceeds the 64-bit safe bound: {0}")]
    Overflow(&'static str),

    #[error("envelope cursor moved backwards: {previous} then {requested}")]
    CursorMisuse { previous: i64, requested: i64 },

    #[error("interval [{a}, {b}] cannot be decomposed: C[{a}] = {partner}")]
    DecompositionViolation { a: usize, b: usize, partner: usize },

    #[error("greedy scheduling needs q = P (q = {q}, P = {p}); use the binary search")]
    RestrictedQ { q: usize, p: usize },

    #[error("instance too large for the oracle: {0}")]
    InstanceTooLarge(String),

    #[error("{pairs} pairs exceed the enumeration cap of {cap}")]
    TooManyPairs { pairs: usize, cap: usize },

    #[error("witness evaluates to {evaluated}, solver reported {reported}")]
    WitnessMismatch { reported: i64, evaluated: i64 },
}

impl Error {
    /// True for violations of instance invariants (as opposed to document
    /// structure problems or internal failures).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::UnsortedCoordinates { .. }
                | Error::BadK { .. }
                | Error::NegativeWeight { .. }
                | Error::OutOfRange { .. }
                | Error::PositionReused { .. }
                | Error::CrossingPairs { .. }
                | Error::BadType { .. }
                | Error::EmptySequence
                | Error::NegativePathParameter { .. }
                | Error::NegativePacketCount(_)
                | Error::BadQ { .. }
                | Error::Overflow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
