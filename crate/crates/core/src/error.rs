use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge {edge} references vertex {vertex} outside the universe of {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("dimension mismatch: expected {expected} vertices, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("hypergraphs are defined over different vertex universes")]
    DifferentUniverse,
    #[error("not a hypertree")]
    NotHypertree,
    #[error("tree is not a host tree of the hypergraph")]
    NotHostTree,
    #[error("graph is not chordal (induced cycle {cycle:?})")]
    NotChordal { cycle: Vec<usize> },
    #[error("graph is not dually chordal")]
    NotDuallyChordal,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set is not a maximal clique of the graph")]
    NotMaximalClique,
    #[error("endpoints must be distinct")]
    SameVertex,
    #[error("illegal operation: {0}")]
    IllegalOperation(String),
    #[error("result count exceeds cap {cap}")]
    Overflow { cap: usize },
    #[error("brute force limited to {cap} vertices, got {n}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
