use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("bound exceeded: {what} has size {size}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("matrix is rank-deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cycle matroids take link edges only; `{label}` is a {kind}")]
    ForbiddenEdgeKind { label: String, kind: String },
    #[error("edge set is not a circle")]
    NotACircle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matroid is not graphic")]
    NotGraphic,
    #[error("matroid has a 1- or 2-separation")]
    NotThreeConnected,
    #[error("basepoint `{0}` is a loop or a coloop")]
    BadBasepoint(String),
    #[error("seed graph is a wheel")]
    WheelSeed,
    #[error("seed graph is not 3-connected")]
    SeedNotThreeConnected,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("circuit axioms violated: {0}")]
    AxiomViolation(String),
    #[error("sign conflicts with the forced sign for `{0}`")]
    SignConflict(String),
}

pub type Result<T> = std::result::Result<T, Error>;
