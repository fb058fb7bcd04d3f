use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex count {0} outside the supported range 1..=64")]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("permutation: {0}")]
    Permutation(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("edge set is not contained in the host graph")]
    NotSubgraph,

    #[error("graphs do not share the same host")]
    HostMismatch,

    #[error("not a Hamiltonian cycle: {0}")]
    NotHamiltonian(String),

    #[error("group enumeration exceeds the bound of {0} elements")]
    EnumerationBound(usize),

    #[error("group order does not fit in 128 bits")]
    OrderOverflow,

    #[error("size regime exceeded: {0}")]
    Regime(String),

    #[error("non-integral extension count {numerator}/{denominator}")]
    NonIntegral { numerator: u128, denominator: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
