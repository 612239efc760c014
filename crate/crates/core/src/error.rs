use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The function (or one of its derivatives) is unbounded at the point.
    #[error("pole: {0}")]
    Pole(String),
    /// The argument or order lies outside where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
