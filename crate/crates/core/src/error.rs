use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (bad vertex id, partial coloring, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// An exhaustive routine refused an instance above its configured cap.
    #[error("{what} too large: {actual} exceeds cap {cap}")]
    Size {
        what: &'static str,
        actual: u128,
        cap: u128,
    },

    /// A construction precondition failed (e.g. an empty admissible color set).
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn check_cap(what: &'static str, actual: u128, cap: u128) -> Result<()> {
    if actual > cap {
        Err(Error::Size { what, actual, cap })
    } else {
        Ok(())
    }
}
