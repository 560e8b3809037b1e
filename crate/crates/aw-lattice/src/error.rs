use thiserror::Error;

/// Errors surfaced by the exact engine.
///
/// `Irrational` is the "rationality certificate": a computation needed an
/// eigenvalue or square root that does not exist in the rational field.  We
/// refuse to approximate, so the operation fails loudly instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("rationality certificate failed: {0}")]
    Irrational(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
