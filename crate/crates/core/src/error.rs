use thiserror::Error;

/// Errors reported by relation, graph, solver, and parsing operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe mismatch")]
    UniverseMismatch,

    #[error("vertex {vertex} out of range for a universe of {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("empty vertex set (the construction needs at least one vertex)")]
    EmptyUniverse,

    #[error("empty path")]
    EmptyPath,

    #[error("empty chain")]
    EmptyChain,

    #[error("equal endpoints: use a cycle query instead of a simple-path query")]
    EqualEndpoints,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction invariant violated: {0}")]
    InvariantViolated(String),

    #[error("oracle cap exceeded: {size} vertices (limit {limit})")]
    OracleCap { size: usize, limit: usize },

    #[error("iteration budget exceeded; non-termination here should be unreachable")]
    IterationBudget,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
