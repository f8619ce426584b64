use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::vset::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("orientation has {found} direction bits but the graph has {expected} edges")]
    DirsLength { expected: usize, found: usize },
    #[error("arc set contains a directed cycle")]
    Cyclic,
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not oriented")]
    MissingArc(usize, usize),
    #[error("orientations live on different graphs")]
    GraphMismatch,
    #[error("toric posets live on different vertex sets")]
    VertexSetMismatch,
    #[error("graph is not an edge-subgraph of the other; only edge-subgraph pairs are supported")]
    NotEdgeSubgraph,
    #[error("point lies on the hyperplane of edge {{{0}, {1}}}")]
    OnHyperplane(usize, usize),
    #[error("sequence is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertex {0} repeated in a cyclic word")]
    RepeatedVertex(usize),
    #[error("directed cycle must have at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex set is not contained in the cyclic word")]
    NotASubset,
    #[error("coordinate {0} is not in [0, 1)")]
    CoordinateRange(usize),
    #[error("malformed input: {field}: {reason}")]
    Malformed { field: String, reason: String },
}

impl Error {
    pub(crate) fn malformed(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Malformed {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
