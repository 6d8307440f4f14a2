use crate::graph::Vertex;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} lies outside the level interval")]
    EndpointOutsideLevel(Vertex),
    #[error("edges have different types and no rotation maps one onto the other")]
    NotHomotypical,
    #[error("the two edges are identical")]
    IdenticalEdges,
    #[error("paths share vertex {0}")]
    SharedVertex(Vertex),
    #[error("a path must contain at least one vertex")]
    EmptyPath,
    #[error("vertex {0} is repeated within a path")]
    RepeatedVertex(Vertex),
    #[error("duplicate path name {0:?}")]
    DuplicateName(String),
    #[error("no part paths to concatenate")]
    NoParts,
    #[error("n = {0} is too small to decompose; use a stored base system")]
    TooSmall(u32),
    #[error("no admissible prime for remainder {0}")]
    DecompositionFailed(u32),
    #[error("generating-path search exhausted for p = {0}")]
    SearchExhausted(u32),
    #[error("{got} external vertices exceed the capacity {max} of a size-{p} level")]
    TooManyExternals { p: u32, max: usize, got: usize },
    #[error("no stored base system for n = {0}")]
    OutOfRange(u32),
    #[error("stored base system for n = {0} failed re-verification: {1}")]
    AssetCorrupt(u32, String),
    #[error("base-system search budget exhausted for n = {0}")]
    SearchBudgetExhausted(u32),
    #[error("vertex label {0} exceeds n = {1}")]
    LabelOutOfRange(u32, u32),
    #[error("unknown path name {0:?}")]
    UnknownPathName(String),
    #[error("exhaustive minimality oracle supports n <= 5, got {0}")]
    TooLarge(u32),
    #[error("n must be at least 1")]
    InvalidN,
    #[error("construction requires a decomposition with at least one level for n = {0}")]
    ConstructionUnavailable(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
