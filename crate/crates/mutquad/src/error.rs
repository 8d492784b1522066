use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by spec validation, topology metrics, and file output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid map spec: {0}")]
    InvalidSpec(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid sweep config: {0}")]
    InvalidSweep(String),

    #[error("mask is empty; Hausdorff distance is undefined")]
    EmptyMask,

    #[error("masks live on different grids")]
    GridMismatch,

    #[error("disk lies entirely outside the viewport")]
    DiskOutsideViewport,

    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
