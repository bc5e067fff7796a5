//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("invalid vertex label `{0}`: labels must be nonempty and contain no whitespace")]
    InvalidLabel(String),

    #[error("face references undeclared vertex `{0}`")]
    UndeclaredVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` is not a face (ghost vertex)")]
    GhostVertex(String),

    #[error("complex has ghost vertices ({0}); a ghost-free complex is required")]
    GhostVerticesPresent(String),

    #[error("vertex label sets overlap on `{0}`")]
    OverlappingLabels(String),

    #[error("not a subcomplex: face {0} is missing from the ambient complex")]
    NotASubcomplex(String),

    #[error("minimal missing faces are not mutually disjoint ({0} and {1} share a vertex)")]
    MissingFacesNotDisjoint(String, String),

    #[error("arity mismatch: expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("vertex namespace collision on label `{0}`")]
    NamespaceCollision(String),

    #[error("pair {index}: small complex is not a full subcomplex of the big complex")]
    NotFullSubcomplex { index: usize },

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("missing hypothesis: {0}")]
    MissingHypothesis(String),

    #[error("missing numeric field `{0}` in space metadata")]
    MissingNumericField(&'static str),

    #[error("`{0}` is not prime")]
    NotPrime(u64),

    #[error("parse error at byte {offset}: {message}")]
    ExprParse { offset: usize, message: String },

    #[error("arithmetic inconsistency: {0}")]
    SeriesInconsistent(String),

    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },

    #[error("unknown decomposition variant `{0}`")]
    UnknownVariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 3 for exceeded enumeration guards,
    /// 2 for every other validation failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GuardExceeded(_) => 3,
            _ => 2,
        }
    }
}
