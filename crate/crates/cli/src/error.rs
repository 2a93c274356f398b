use orbitloom_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    NonCommensurable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn kind(&self) -> &'static str {
        match self {
            AppError::Validation(_) => "validation",
            AppError::NonCommensurable(_) => "non_commensurable",
            AppError::Io(_) => "io",
        }
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NonCommensurable(_) | CoreError::NonPeriodic(_) => {
                AppError::NonCommensurable(e.to_string())
            }
            CoreError::Io(io) => AppError::Io(io),
            other => AppError::Validation(other.to_string()),
        }
    }
}
