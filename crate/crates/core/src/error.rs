use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("curve is not periodic: {0}")]
    NonPeriodic(String),
    #[error("frequencies are not commensurable: {0}")]
    NonCommensurable(String),
    #[error("curve has no circular components")]
    EmptyCurve,
    #[error("nothing to export")]
    EmptyInput,
    #[error("mesh has no triangles")]
    EmptyMesh,
    #[error("degenerate frame: consecutive spine samples {index} and {next} coincide")]
    DegenerateFrame { index: usize, next: usize },
    #[error("cannot rationalize {0}")]
    Rationalize(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
