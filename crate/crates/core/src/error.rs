use thiserror::Error;

use crate::separator::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0} (pair ({0},{0}))")]
    SelfLoop(usize),

    #[error("vertex id {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid alpha {0:?}: expected p/q with 1/2 < p/q < 1")]
    Alpha(String),

    #[error("{0}")]
    Precondition(String),

    #[error("{what} exceeds cap: {value} > {cap}")]
    Cap { what: &'static str, value: usize, cap: usize },

    #[error("invalid partition: {}", join_violations(.0))]
    InvalidPartition(Vec<Violation>),

    #[error("graph is not {0}-regular")]
    NotRegular(usize),

    #[error("separator is not an independent set: edge {0}-{1} inside I")]
    NotIndependent(usize, usize),

    #[error("invalid gadget spec: {0}")]
    GadgetSpec(String),

    #[error("capacity: {0}")]
    Capacity(String),

    #[error("partition universe has {found} vertices but graph has {expected}")]
    Dimension { expected: usize, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable category used as a diagnostic prefix by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } | Error::Alpha(_) | Error::Json(_) => "parse",
            Error::Io(_) => "io",
            _ => "precondition",
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
