use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{family} graph needs size >= {min}, got {size}")]
    InvalidSize {
        family: &'static str,
        size: usize,
        min: usize,
    },
    #[error("multiplicity m must be at least 1, got {0}")]
    InvalidMultiplicity(usize),
}

/// Failures while reading a graph from text. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("byte {byte}: {message}")]
    Graph6 { byte: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("eigensolver tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("expected a square matrix with {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
