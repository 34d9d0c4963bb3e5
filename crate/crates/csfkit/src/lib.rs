//! Command-line front end, JSON formats and exhaustive verification runs
//! built on [`csfkit_core`].

pub mod cli;
pub mod json;
pub mod verify;

pub use csfkit_core::*;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] csfkit_core::Error),
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
