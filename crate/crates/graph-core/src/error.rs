use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

impl GraphError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        GraphError::Parse { line, msg: msg.into() }
    }

    /// True for errors caused by malformed input text rather than graph structure.
    pub fn is_parse(&self) -> bool {
        matches!(self, GraphError::Parse { .. } | GraphError::SelfLoop { .. })
    }
}
