use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family} (minimum {min})")]
    InvalidRank {
        family: String,
        rank: usize,
        min: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size limit exceeded: {what} is {size}, limit {limit}")]
    SizeLimit {
        what: String,
        size: u128,
        limit: u128,
    },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn size_limit(what: impl Into<String>, size: u128, limit: u128) -> Error {
    Error::SizeLimit {
        what: what.into(),
        size,
        limit,
    }
}

/// Default bound on group orders for anything that materializes every element.
pub const DEFAULT_SIZE_LIMIT: u128 = 1_000_000;

/// Default bound on vertex count for subset brute force.
pub const DEFAULT_BRUTE_FORCE_VERTICES: usize = 24;

/// Group-order bound, overridable through `COXBOOL_SIZE_LIMIT`.
pub fn size_limit_from_env() -> u128 {
    std::env::var("COXBOOL_SIZE_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .unwrap_or(DEFAULT_SIZE_LIMIT)
}
