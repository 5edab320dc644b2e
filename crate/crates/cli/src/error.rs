use std::fmt;

/// Failure of one command, split by exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or unreadable inputs: exit 1.
    Usage(String),
    /// The engine rejected the work: exit 2.
    Engine(costzdd::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Engine(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<costzdd::Error> for CliError {
    fn from(e: costzdd::Error) -> Self {
        CliError::Engine(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
