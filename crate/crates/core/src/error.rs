use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex count {0} outside the supported range 1..={max}", max = crate::MAX_VERTICES)]
    BadVertexCount(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),

    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed JSON input: {0}")]
    Json(String),

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex set is not independent: {0}-{1} are adjacent")]
    NotIndependent(usize, usize),

    #[error("face {face:?} admits no chord keeping the independent set independent")]
    NoAdmissibleChord { face: Vec<usize> },

    #[error("embedding is not triangulated: a face has length {0}")]
    NotTriangulated(usize),

    #[error("charge set invalid: {0}")]
    ChargeSet(String),

    #[error("minimum degree {0} is below the required 4")]
    MinDegreeTooLow(usize),

    #[error("edge count {m} out of range 0..={max} for {n} vertices")]
    EdgeCountOutOfRange { n: usize, m: usize, max: usize },

    #[error("empty vertex set")]
    EmptySet,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("given side is not one part of a bipartition: edge {0}-{1} stays inside a part")]
    NotABipartition(usize, usize),

    #[error("vertex {vertex} has degree {degree}, above the h-extremality search cap {cap}")]
    DegreeCapExceeded { vertex: usize, degree: usize, cap: usize },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("ordering is invalid: {0}")]
    InvalidOrdering(String),

    #[error("graph is not in class {0}")]
    ClassPrecondition(String),

    #[error("certificate failed revalidation: {0}")]
    Revalidation(String),

    #[error("construction did not converge within {0} exchange steps")]
    NotConverged(usize),

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("generation budget exhausted after {0} attempts")]
    GenerationBudget(usize),

    #[error("invalid generator parameters: {0}")]
    GenParams(String),
}
