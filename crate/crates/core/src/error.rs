use thiserror::Error;

use crate::cliquegraph::GraphViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("window at offset {offset} of length {len} does not fit a sequence of length {seq_len}")]
    OffsetOutOfRange {
        offset: usize,
        len: usize,
        seq_len: usize,
    },

    #[error("pattern of length {pattern} is longer than sequence of length {seq}")]
    PatternTooLong { pattern: usize, seq: usize },

    #[error("expected {expected} offsets, got {got}")]
    OffsetCount { expected: usize, got: usize },

    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance has no strings")]
    EmptyInstance,

    #[error("state bound exceeded: {needed} states needed, bound is {bound}")]
    StateBoundExceeded { needed: u128, bound: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {}", format_violations(.0))]
    Graph(Vec<GraphViolation>),

    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),

    #[error("rank {rank} out of range for class size {n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("selection has {got} entries, graph has {k} colors")]
    SelectionSize { got: usize, k: usize },

    #[error("edge index {index} out of range ({count} edges)")]
    EdgeOutOfRange { index: usize, count: usize },

    #[error("vertex name {0:?} collides with a reserved symbol")]
    ReservedName(String),

    #[error("graph has no edges (k = {k}); reduction needs at least one edge")]
    EdgelessGraph { k: usize },

    #[error("vertex-string optima check failed: {0}")]
    VertexOptimaViolation(String),

    #[error("gadget distance check failed on edge {edge}: {msg}")]
    GadgetDistanceViolation { edge: usize, msg: String },
}

fn format_violations(v: &[GraphViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
