use thiserror::Error;

/// Errors raised by the inflection engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid characters in {0:?}")]
    InvalidCharacters(String),
    #[error("unknown code {0:?}")]
    UnknownCode(String),
    #[error("unknown part of speech {0:?}")]
    UnknownPos(String),
    #[error("unknown mutation {0:?}")]
    UnknownMutation(String),
    #[error("{lemma:?} is not a valid {expected} lemma")]
    InvalidLemma { lemma: String, expected: &'static str },
    #[error("{lemma:?} has no {form}")]
    FormAbsent { lemma: String, form: &'static str },
    #[error("{0:?} is not perfective")]
    NotPerfective(String),
    #[error("{0:?} has no degrees of comparison")]
    NoDegree(String),
    #[error("value {0} out of range")]
    OutOfRange(String),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("bad exception data in {table} line {line}: {reason}")]
    BadTable { table: String, line: usize, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("no usable entries in {0}")]
    EmptyCorpus(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
