use thiserror::Error;

/// Errors shared across the crate.
///
/// Everything here is a caller mistake or a resource guard; no operation
/// fails for numerical reasons (all arithmetic is exact).
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration or matrix computation would exceed the configured budget.
    #[error("{what} budget exceeded: needs {size}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        size: u64,
        budget: u64,
    },

    /// Inversion of zero in a cyclotomic field.
    #[error("division by zero in Q(zeta_{n})")]
    DivisionByZero { n: u32 },

    /// A parameter outside the documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Arithmetic between elements of different cyclotomic fields.
    #[error("mixed cyclotomic orders: {left} vs {right}")]
    MixedOrders { left: u32, right: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
