use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },

    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },

    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("subgroup belongs to a group of order {found}, expected order {expected}")]
    ParentMismatch { expected: usize, found: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not a member of the lattice")]
    NotInLattice,

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("work budget exceeded: {needed} evaluations requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("bracket depth n = {n} outside 1..={max}")]
    DepthOutOfRange { n: usize, max: usize },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
