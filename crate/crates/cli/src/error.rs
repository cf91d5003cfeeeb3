use std::io;
use std::path::PathBuf;

use orbkin_core::grid::StepError;
use orbkin_core::model::ModelError;
use orbkin_core::planar::PlanarError;
use orbkin_core::time::TimeError;
use thiserror::Error;

/// Everything that maps to exit code 2.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("model: {0}")]
    Model(#[from] ModelError),
    #[error("model is not in planar form: {0}")]
    Planar(#[from] PlanarError),
    #[error("date: {0}")]
    Time(#[from] TimeError),
    #[error(transparent)]
    Step(#[from] StepError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("reference file has no rows")]
    EmptyReference,
    #[error("reference jd must be strictly increasing (row {row}: {jd} after {prev})")]
    Unsorted { row: usize, jd: f64, prev: f64 },
    #[error("{0}")]
    Invalid(String),
}
