use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range arguments.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input is well-formed but the operation is undefined for it.
    #[error("domain error: {0}")]
    Domain(String),

    /// A firing whose set contains a vertex without enough chips.
    #[error("invalid firing: vertex {vertex} holds {have} chips but must send {need}")]
    InvalidFiring { vertex: usize, have: u64, need: u64 },

    /// A size guard tripped before any expensive work started.
    #[error("resource guard exceeded: {what} is {size}, limit {limit}")]
    Resource {
        what: &'static str,
        size: u128,
        limit: u128,
    },
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
