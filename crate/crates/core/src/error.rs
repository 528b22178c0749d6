use thiserror::Error;

use crate::validation::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("degree {lower:?} is not below {upper:?}")]
    NotBelow { lower: Vec<u32>, upper: Vec<u32> },
    #[error("degree arithmetic overflow")]
    Overflow,
    #[error("period vector must be nonzero")]
    ZeroVector,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("paths are not composable: source {source_vertex} differs from range {range_vertex}")]
    NotComposable {
        source_vertex: String,
        range_vertex: String,
    },
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("segment bounds violate 0 <= m <= n <= d(lambda)")]
    BoundViolation,
    #[error("the two shift degrees must differ")]
    EqualShifts,
    #[error("the graph is not locally periodic at {vertex} for m = {m:?}, n = {n:?}")]
    NotPeriodic { vertex: String, m: Vec<u32>, n: Vec<u32> },
    #[error("locally periodic at {vertex} for m = {m:?}, n = {n:?}, so no witness exists")]
    PeriodicPair { vertex: String, m: Vec<u32>, n: Vec<u32> },
    #[error("decision inconclusive at {vertex} for m = {m:?}, n = {n:?} after {states} states")]
    Inconclusive {
        vertex: String,
        m: Vec<u32>,
        n: Vec<u32>,
        states: usize,
    },
    #[error("vertex set is not saturated and hereditary")]
    NotSaturatedHereditary,
    #[error("vertex set is the whole vertex set")]
    WholeVertexSet,
    #[error("{count} vertices exceed the enumeration limit of {limit}")]
    TooManyVertices { count: usize, limit: usize },
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("invalid infinite path: {0}")]
    InvalidInfinitePath(&'static str),
    #[error("malformed representation element: {0}")]
    MalformedElement(&'static str),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
