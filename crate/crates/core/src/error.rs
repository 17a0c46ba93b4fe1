use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument values (wrong arity, out-of-range sizes, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The input lacks structure an operation requires (a bridge where
    /// none is allowed, a graph outside the expected class, ...).
    #[error("structure error: {0}")]
    Structure(String),

    /// The instance exceeds a size cap of an exact method.
    #[error("capability error: {0}")]
    Capability(String),

    /// A witness or certificate failed re-validation.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Malformed input text or serialized data.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
