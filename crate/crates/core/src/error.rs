use thiserror::Error;

use crate::complex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("facet family is empty")]
    EmptyFamily,
    #[error("facets have different cardinalities ({expected} and {found})")]
    NonUniformCardinality { expected: usize, found: usize },
    #[error("facets must have at least 2 vertices, found {0}")]
    DimensionTooSmall(usize),
    #[error("facet repeats vertex {0}")]
    RepeatedVertex(VertexId),
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Vec<VertexId>),
    #[error("vertex {0} is not in the vertex universe")]
    VertexOutsideUniverse(VertexId),
    #[error("vertex labels must be positive")]
    ZeroVertex,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("vertex universes overlap at {0}")]
    OverlappingUniverses(VertexId),
    #[error("vertex universe is not {{1..n}}")]
    UniverseNotCanonical,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("window start {start} out of range for n={n}, d={d}")]
    StartOutOfRange { n: usize, d: usize, start: usize },
    #[error("complex has no facets")]
    DegenerateComplex,
    #[error("complex has {n} vertices, need at least {needed}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("complex has {0} vertices, more than the supported 64")]
    TooManyVertices(usize),
    #[error("brute force is limited to {limit} vertices, got {n}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("labeling is not a bijection onto the vertex universe")]
    LabelingNotBijective,
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("search exceeded its time budget")]
    Timeout,
    #[error("vertex universe cannot be written in the text format")]
    UnrepresentableUniverse,
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("line {line}: cannot parse {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: vertices must be strictly increasing")]
    NotIncreasing { line: usize },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::Parse {
            line,
            source: Box::new(self),
        }
    }
}
