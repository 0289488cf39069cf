use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is structurally wrong (not a tree, bad family order, malformed edge).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Parameters are well formed but outside the range where a formula is valid.
    #[error("domain error: {0}")]
    Domain(String),

    /// No k-regular graph on p vertices exists when kp is odd.
    #[error("no {degree}-regular graph on {order} vertices: degree * order is odd")]
    ParityViolation { order: usize, degree: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A proof recipe was asked for negative multiplicities or an impossible order.
    #[error("construction infeasible: {0}")]
    ConstructionInfeasible(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Two applicable statements disagree. This would falsify a published result,
    /// so it is never silently resolved.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
