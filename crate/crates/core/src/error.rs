use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("invalid LCF code: {0}")]
    InvalidLcf(String),

    #[error("the empty graph cannot be analyzed")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("automorphism search exceeded its budget of {0} tree nodes")]
    BudgetExceeded(u64),

    #[error("graph is not vertex-transitive ({0} vertex orbits)")]
    NotVertexTransitive(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("invalid double coset data: {0}")]
    InvalidDoubleCoset(String),

    #[error("edge {{{0}, {1}}} is not an edge of the base graph")]
    NotAnEdge(usize, usize),

    #[error("{0}")]
    NotAnAutomorphism(String),

    #[error("invalid Bouwer parameters: {0}")]
    InvalidBouwer(String),

    #[error("unknown registry graph `{0}`")]
    UnknownGraph(String),

    #[error("arc-type syntax error: {0}")]
    PartitionSyntax(String),

    #[error("empty partition")]
    EmptyPartition,

    #[error("marked partition {0} is not realisable")]
    NotRealisable(String),

    #[error("pool exhausted: need {needed} pairwise non-isomorphic blocks of kind {kind}, pool has {available}")]
    PoolExhausted {
        kind: String,
        needed: usize,
        available: usize,
    },

    #[error("arc-type mismatch: expected {expected}, computed {computed}")]
    Mismatch { expected: String, computed: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),
}
