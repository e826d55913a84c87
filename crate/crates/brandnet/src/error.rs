//! Crate-wide error type.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown user `{0}`")]
    UnknownUser(String),

    #[error("empty user id")]
    EmptyUserId,

    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("comment `{comment_id}` references missing post `{post_id}`")]
    DanglingPost { comment_id: String, post_id: String },

    #[error("comment `{comment_id}` references parent `{parent_id}` which does not exist on post `{post_id}`")]
    DanglingParent {
        comment_id: String,
        parent_id: String,
        post_id: String,
    },

    #[error("no edges to invert")]
    NoEdges,

    #[error("node populations differ (missing: {missing:?}, extra: {extra:?})")]
    PopulationMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("no individual value supplied for node `{0}`")]
    MissingValue(String),

    #[error("sigma must be positive, got {0}")]
    NonPositiveSigma(f64),

    #[error("threshold must be non-negative, got {0}")]
    NegativeThreshold(f64),

    #[error("degenerate potential field: every node value is zero")]
    DegenerateField,

    #[error("disconnected field: no finite positive distances")]
    DisconnectedField,

    #[error("damping factor must lie in (0, 1), got {0}")]
    InvalidDamping(f64),

    #[error("{method} did not converge within {max_iter} iterations (residual {residual:e})")]
    NotConverged {
        method: &'static str,
        max_iter: usize,
        residual: f64,
    },

    #[error("empty graph")]
    EmptyGraph,

    #[error("empty ranking")]
    EmptyRanking,

    #[error("top percent must lie in (0, 100], got {0}")]
    InvalidPercent(f64),

    #[error("power-law fit needs at least 3 distinct positive degrees, got {0}")]
    InsufficientSupport(usize),

    #[error("lexicon term `{0}` is invalid (empty or duplicate after lowercasing)")]
    InvalidLexiconTerm(String),

    #[error("{file}: missing or malformed header (expected `{expected}`)")]
    BadHeader { file: PathBuf, expected: String },

    #[error("{file}:{line}: column `{column}`: {message}")]
    BadRow {
        file: PathBuf,
        line: u64,
        column: String,
        message: String,
    },

    #[error("input file not found: {0}")]
    MissingInput(PathBuf),

    #[error("config error: {0}")]
    Config(String),

    #[error("graph has {nodes} nodes, above the cap of {cap}; raise `node_cap` to run exact all-pairs analysis on a graph this large")]
    NodeCapExceeded { nodes: usize, cap: usize },

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an error with the pipeline stage it occurred in.
    pub fn in_stage(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }

    /// Exit code for the CLI: 1 for input/validation problems, 2 for
    /// computation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Stage { source, .. } => source.exit_code(),
            Error::UnknownUser(_)
            | Error::EmptyUserId
            | Error::DuplicateId { .. }
            | Error::DanglingPost { .. }
            | Error::DanglingParent { .. }
            | Error::PopulationMismatch { .. }
            | Error::MissingValue(_)
            | Error::InvalidPercent(_)
            | Error::InvalidDamping(_)
            | Error::NonPositiveSigma(_)
            | Error::NegativeThreshold(_)
            | Error::InvalidLexiconTerm(_)
            | Error::BadHeader { .. }
            | Error::BadRow { .. }
            | Error::MissingInput(_)
            | Error::Config(_)
            | Error::NodeCapExceeded { .. }
            | Error::Csv(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
