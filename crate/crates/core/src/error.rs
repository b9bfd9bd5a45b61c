use thiserror::Error;

use crate::winker::BudgetExceeded;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Montesinos parameters (p={p}, q={q}, e={e}): {reason}")]
    InvalidParams {
        p: i64,
        q: i64,
        e: i64,
        reason: &'static str,
    },
    #[error("unknown generator {0}")]
    UnknownGenerator(u32),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("inconsistent Cayley graph: {0}")]
    InconsistentCayleyGraph(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}
