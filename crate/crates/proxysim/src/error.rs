use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("input contains no automaton")]
    EmptyInput,

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("relation has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("relation is not an equivalence")]
    NotEquivalence,

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("{what} exceeded the cap of {cap} states")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("automaton has {states} states, above the limit of {limit} for {what}")]
    TooLarge { what: &'static str, states: usize, limit: usize },

    #[error("fixed-word check of ({q}, {s}) exceeded the cap of {cap} states")]
    PairCapExceeded { q: String, s: String, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
