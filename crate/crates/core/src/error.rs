use thiserror::Error;

/// Errors raised by the exact arithmetic layer, the sequence generators, the
/// identity catalog and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative index {0} is not supported")]
    NegativeIndex(i64),
    #[error("discriminant mismatch: sqrt({left}) vs sqrt({right})")]
    DiscriminantMismatch { left: String, right: String },
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves remainder {0}")]
    InexactDivision(String),
    #[error("series mismatch: {0}")]
    SeriesMismatch(String),
    #[error("unknown generating function `{0}`")]
    UnknownGeneratingFunction(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown equation `{0}`")]
    UnknownEquation(String),
    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),
    #[error("parameter {name}={value} outside domain of `{id}`")]
    OutOfDomain {
        id: String,
        name: &'static str,
        value: i64,
    },
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
    #[error("b-file line {line}: {reason}")]
    MalformedBFile { line: usize, reason: String },
    #[error("io error on {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("report error: {0}")]
    Report(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
