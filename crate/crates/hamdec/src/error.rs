use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is not connected")]
    NotConnected,

    #[error("multiplicity must be at least 1")]
    BadMultiplicity,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("connection set contains the identity")]
    IdentityInConnection,

    #[error("connection set is not inverse-closed")]
    ConnectionNotInverseClosed,

    #[error("permutation is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog entry: {0}")]
    UnknownGraph(String),

    #[error("catalog error: {0}")]
    Catalog(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
