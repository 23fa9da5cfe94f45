use thiserror::Error;

/// Errors produced by graph construction, I/O, and the analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {{{u}, {v}}} is not present")]
    MissingEdge { u: usize, v: usize },

    #[error("edge {{{u}, {v}}} is already present")]
    EdgeExists { u: usize, v: usize },

    #[error("degree sequence is empty")]
    EmptySequence,

    #[error("degree sequence entries must be positive")]
    ZeroDegree,

    #[error("not a tree degree sequence: {0}")]
    NotTreeSequence(String),

    #[error("no connected simple graph realizes the degree sequence")]
    NotConnectedGraphical,

    #[error("not a spider sequence: expected (k, 2, ..., 2, 1^k) with k >= 2")]
    NotSpiderSequence,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6 encoding supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("vertex function has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("zero vector")]
    ZeroVector,

    #[error("sequence lengths differ: {0} vs {1}")]
    SequenceLengthMismatch(usize, usize),

    #[error("sequences are not strictly comparable: {0}")]
    NotComparable(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("vertex count {n} exceeds the enumeration limit {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("canonical labeling search space too large ({0} candidate orderings)")]
    CanonicalTooLarge(u128),
}

pub type Result<T> = std::result::Result<T, Error>;
