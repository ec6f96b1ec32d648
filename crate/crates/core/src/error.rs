use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// An argument violated an operation's precondition (for example `l = 0`).
    #[error("invalid argument `{name}` = {value}: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: i128,
        reason: &'static str,
    },

    /// A closed form produced a value that should have been an integer but was not.
    /// This always indicates a bug in a formula, never bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, value: impl Into<i128>, reason: &'static str) -> Error {
    Error::InvalidArgument {
        name,
        value: value.into(),
        reason,
    }
}
