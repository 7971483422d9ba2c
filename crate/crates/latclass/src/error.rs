use std::io;
use std::path::PathBuf;

use latclass_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Failure {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("writing {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl Failure {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Core(CoreError::InvalidInput(_)) => 2,
            Failure::Core(CoreError::Infeasible { .. } | CoreError::SplitConditionUnmet { .. }) => 3,
            Failure::Core(CoreError::BudgetExceeded { .. }) => 4,
            Failure::Core(CoreError::AssemblyMismatch(_)) => 5,
            Failure::Io { .. } | Failure::Json(_) | Failure::Pool(_) => 1,
        }
    }
}
