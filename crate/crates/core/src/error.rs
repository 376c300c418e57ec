use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol token {0:?}")]
    InvalidSymbol(String),
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("invalid automaton: {0}")]
    Invalid(String),
    #[error("simple-word enumeration exceeded the cap of {limit} words")]
    CapExceeded { limit: usize },
    #[error("{states} states exceeds the enumeration limit of {limit}")]
    StateLimit { states: usize, limit: usize },
    #[error("the DFA must be complete")]
    NotComplete,
    #[error("set is not suffix-tracking:\n{0}")]
    NotSuffixTracking(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("determinism conflict: {0}")]
    Determinism(String),
    #[error("suppression failed: {0}")]
    Suppression(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has {vertices} vertices; the brute-force limit is {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("derivation round-trip failed: {0}")]
    RoundTrip(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
