use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The requested target cannot be reached with the given parameters.
    /// `minimal` is the smallest target that would be feasible.
    #[error("infeasible target {target}: the smallest feasible value is {minimal}")]
    Infeasible { target: i64, minimal: i64 },
    /// A construction produced a polygon that violates one of its own
    /// postconditions.
    #[error("assembly mismatch: {0}")]
    AssemblyMismatch(String),
    #[error("work budget of {budget} units exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("split condition unmet: k = {k} is below (d-2)(w-d-1) = {threshold}")]
    SplitConditionUnmet { k: i64, threshold: i64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
