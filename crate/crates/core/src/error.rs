use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Checked cost arithmetic left the signed 64-bit range.
    #[error("cost arithmetic overflow")]
    Overflow,

    /// The node table cannot hold another node.
    #[error("node table full: at most {0} non-terminal nodes fit in one forest")]
    Capacity(u64),

    /// Line-oriented text failed to parse.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An enumeration would produce more sets than the caller allowed.
    #[error("family has {count} members, more than the limit of {limit}")]
    LimitExceeded { count: String, limit: u64 },

    /// Sampling from the empty family.
    #[error("cannot sample from the empty family")]
    EmptyFamily,

    /// Two overlapping intervals with different results were stored for one node.
    #[error("interval memo conflict at node {node}: {detail}")]
    MemoConflict { node: u32, detail: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
