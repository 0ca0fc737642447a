use thiserror::Error;

use crate::engine::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph or partition input.
    #[error("invalid input: {0}")]
    InputFormat(String),

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The budgets are too small for the requested lemma.
    #[error("budget sum {actual} is below the required bound {required}")]
    Hypothesis { required: i64, actual: i64 },

    /// A height function failed one of its four defining properties on a
    /// graph the engine reached.
    #[error("height function `{name}` violates property {property}: {detail}")]
    HeightContract {
        name: String,
        property: u8,
        detail: String,
    },

    #[error("step budget of {budget} moves exhausted")]
    BudgetExceeded { budget: usize, best: Box<Partition> },

    /// An internal consistency assertion failed; `history` is a dump of the
    /// shuffle state at the time of failure.
    #[error("internal error: {detail}\n{history}")]
    Internal { detail: String, history: String },

    #[error("size limit exceeded: {0}")]
    Size(String),
}
