use thiserror::Error;

use crate::graph::Vertex;

/// Why a line of a graph file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("rotation at vertex {vertex} inconsistent with edge set: {reason}")]
    RotationInconsistent { vertex: Vertex, reason: String },
    #[error("arc ({0},{1}) is neither a loop position nor an edge")]
    ArcOutsideDomain(Vertex, Vertex),
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("arc ({0},{1}) is neither a loop position nor an edge")]
    ArcOutsideDomain(Vertex, Vertex),
    #[error("invalid rotation at vertex {vertex}: {reason}")]
    InvalidRotation { vertex: Vertex, reason: String },
    #[error("graph carries no rotation system")]
    MissingRotation,
    #[error("Euler check failed: V - E + F = {vertices} - {edges} + {faces} != 2")]
    EulerCheck {
        vertices: usize,
        edges: usize,
        faces: usize,
    },

    #[error("graph is not connected")]
    Disconnected,
    #[error("complete graph has no separator")]
    CompleteGraph,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is a cycle")]
    IsCycle,
    #[error("graph is 3-connected")]
    ThreeConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("minimum degree {found} is below the required {required}")]
    MinDegree { required: usize, found: usize },

    #[error("dimension {0} outside 1..=3")]
    InvalidDimension(usize),
    #[error("operation requires a 1-dimensional coloring, got k = {0}")]
    NotDimensionOne(usize),
    #[error("vertex {0} listed twice")]
    RepeatedVertex(Vertex),
    #[error("color value {0} too large to compose")]
    ColorOverflow(u64),

    #[error("{n} vertices exceed the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("{n} vertices exceed the canonical-form limit of {limit}")]
    CanonicalLimit { n: usize, limit: usize },

    #[error("vertices {0:?} do not lie on a common face")]
    NotOnCommonFace([Vertex; 3]),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error("unknown solid `{0}`")]
    UnknownSolid(String),
    #[error("corpus limit exceeded: max_n = {0}")]
    CorpusLimit(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
