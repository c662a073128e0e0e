use thiserror::Error;

use crate::cell::{Edge, TriCell};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate cell {0}")]
    DuplicateCell(TriCell),
    #[error("free edge ({0}) is not on the boundary of the region")]
    FreeEdgeNotOnBoundary(Edge),
    #[error("cut edge ({0}) does not separate two cells of the region")]
    CutEdgeNotInterior(Edge),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has no planar embedding attached")]
    NoEmbedding,
    #[error("embedding is not planar: {0}")]
    NonPlanar(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid quad: {0}")]
    InvalidQuad(String),
    #[error("region is not invariant under {0}")]
    NotInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
