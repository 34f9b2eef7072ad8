use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("edge {edge} is a self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge} references vertex {vertex} but the graph has {vertex_count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {edge} duplicates the pair ({u}, {v})")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("vertices {0} and {1} are not connected")]
    NoPath(usize, usize),
    #[error("operation requires a pixel grid graph")]
    UnsupportedTopology,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("graph too large for exhaustive search ({0} vertices)")]
    TooLarge(usize),
}

/// Decoding failure with the byte offset where it was detected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{kind} at byte {offset}")]
pub struct FormatError {
    pub kind: FormatErrorKind,
    pub offset: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatErrorKind {
    #[error("bad magic number")]
    BadMagic,
    #[error("malformed header")]
    MalformedHeader,
    #[error("unsupported maxval {0}")]
    UnsupportedMaxval(u32),
    #[error("truncated payload")]
    Truncated,
    #[error("sample value out of range")]
    SampleOutOfRange,
    #[error("image dimensions are zero or too large")]
    BadDimensions,
    #[error("{0}")]
    Syntax(String),
}

impl FormatError {
    pub(crate) fn new(kind: FormatErrorKind, offset: usize) -> Self {
        Self { kind, offset }
    }
}
