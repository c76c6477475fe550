use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the two gain graphs have different underlying graphs")]
    UnderlyingGraphMismatch,
    #[error("vertex ordering is not a permutation of 0..{n}")]
    InvalidOrdering { n: usize },
    #[error("source and target coincide at vertex {vertex}")]
    SameEndpoints { vertex: usize },
    #[error("gain set at vertex {vertex} grew to {size} distinct gains (cap {cap})")]
    GainSetOverflow { vertex: usize, size: usize, cap: usize },
    #[error("graph on {n} vertices exceeds the limit {max} for this exhaustive check")]
    TooLarge { n: usize, max: usize },
    #[error("edge {edge} has non-positive weight {weight}")]
    NonPositiveWeight { edge: usize, weight: f64 },
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("eigenpair residual {residual:e} exceeds {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },
    #[error("gain graph is not distance compatible")]
    Incompatible,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}
