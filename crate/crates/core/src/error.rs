use thiserror::Error;

use crate::planar_map::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("rotation system is not planar (V - E + F = {euler}, expected 2)")]
    NonPlanarRotation { euler: i64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("outer face hint {0:?} is not a face cycle")]
    BadOuterHint(Vec<VertexId>),
    #[error("outer face has length {len}, expected a quadrangle")]
    NotQuadOuter { len: usize },
    #[error("inner face {face} has length {len}, expected a triangle")]
    NonTriangularInnerFace { face: usize, len: usize },
    #[error("separating triangle {0:?}")]
    SeparatingTriangle([VertexId; 3]),
    #[error("outer labels W, N, E, S are not the outer face in clockwise order")]
    BadLabelOrder,
    #[error("triangulation has no inner vertex")]
    NoInnerVertex,
    #[error("enumeration size {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid ternary tree: {0}")]
    InvalidTree(String),
    #[error("no alpha0-orientation exists (max flow {flow} < demand {demand})")]
    NoOrientation { flow: usize, demand: usize },
    #[error("sweep stuck with no admissible pair (path length {path_len})")]
    Stuck { path_len: usize },
    #[error("alternating 4-cycle is not a right cycle")]
    NotRightCycle,
    #[error("alternating 4-cycle is not a left cycle")]
    NotLeftCycle,
    #[error("partition is not minimal: edge {edge} has both half-edges ingoing")]
    NotMinimal { edge: usize },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable upper-case identifier, printed by the command-line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedRotation(_) => "MALFORMED_ROTATION",
            Error::NonPlanarRotation { .. } => "NON_PLANAR_ROTATION",
            Error::Disconnected => "DISCONNECTED",
            Error::BadOuterHint(_) => "BAD_OUTER_HINT",
            Error::NotQuadOuter { .. } => "NOT_QUAD_OUTER",
            Error::NonTriangularInnerFace { .. } => "NON_TRIANGULAR_INNER_FACE",
            Error::SeparatingTriangle(_) => "SEPARATING_TRIANGLE",
            Error::BadLabelOrder => "BAD_LABEL_ORDER",
            Error::NoInnerVertex => "NO_INNER_VERTEX",
            Error::CapExceeded { .. } => "CAP_EXCEEDED",
            Error::InvalidTree(_) => "INVALID_TREE",
            Error::NoOrientation { .. } => "NO_ORIENTATION",
            Error::Stuck { .. } => "STUCK",
            Error::NotRightCycle => "NOT_RIGHT_CYCLE",
            Error::NotLeftCycle => "NOT_LEFT_CYCLE",
            Error::NotMinimal { .. } => "NOT_MINIMAL",
            Error::InvalidStructure(_) => "INVALID_STRUCTURE",
            Error::Parse { .. } => "PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
