use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown candidate, bad vector, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A text format could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation is undefined for this input (e.g. Maximin with one candidate).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive search ran out of nodes before proving optimality.
    #[error("search node limit of {limit} exceeded (best cost found: {})", fmt_best(.best))]
    NodeLimit { limit: u64, best: Option<u64> },

    /// The requested solver does not apply to this instance.
    #[error("solver not applicable: {0}")]
    NotApplicable(String),
}

fn fmt_best(best: &Option<u64>) -> String {
    best.map_or_else(|| "none".to_string(), |b| b.to_string())
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
