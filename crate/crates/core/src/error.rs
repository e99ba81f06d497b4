use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape/class size disagreement: {0}")]
    SizeMismatch(String),

    #[error("first row too short: ({first},{rho}) is not a partition")]
    FirstRowTooShort { first: i64, rho: String },

    #[error("resource limit: {what} = {value} exceeds ceiling {ceiling}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        ceiling: usize,
    },

    #[error("integer overflow in {0} arithmetic")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("invalid partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache format: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
