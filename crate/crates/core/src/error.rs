//! Error type shared across the crate.

use std::path::PathBuf;

/// Errors produced by cloud ingestion, estimators, and generators.
#[derive(Debug, thiserror::Error)]
pub enum DimError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path} at line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("degenerate cloud: all points are identical")]
    DegenerateCloud,

    #[error("degenerate distances; dataset has duplicate points")]
    DegenerateDistances,

    #[error("curve fully saturated; increase r_max or reduce steps density")]
    Saturated,

    #[error("r range below smallest pairwise distance")]
    EmptyCorrelation,

    #[error(
        "rotational symmetry check failed (max K-S {max_ks:.4} > threshold {threshold:.4}); \
         rerun with flattening disabled or fix the data"
    )]
    SymmetryFailed { max_ks: f64, threshold: f64 },

    #[error("cell index overflow: box side {r} is too small for the coordinate range")]
    IndexOverflow { r: f64 },
}

pub type Result<T> = std::result::Result<T, DimError>;

impl DimError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        DimError::Io {
            path: path.into(),
            source,
        }
    }
}
