use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The specification has no positive part.
    EmptySpec,
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { required: String, budget: u64 },
    /// Two points or vectors live in different ambient dimensions.
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySpec => f.write_str("specification must contain at least one positive part"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "refusing to enumerate {required} objects: enumeration budget is {budget}"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} coordinates, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
