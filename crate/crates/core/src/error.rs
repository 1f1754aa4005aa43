use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidSystem {
        family: String,
        rank: usize,
        reason: String,
    },
    #[error("unknown algebra {name:?}{}", suggestion.as_ref().map(|s| format!(" (did you mean {s:?}?)")).unwrap_or_default())]
    UnknownAlgebra {
        name: String,
        suggestion: Option<String>,
    },
    #[error("parameter out of range for {name}: {reason}")]
    ParameterRange { name: String, reason: String },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("not a root of {system}: {root}")]
    NotARoot { system: String, root: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
