use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CROSS_CHECK: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid spec {input:?}: {reason}")]
    Spec { input: String, reason: String },
    #[error("{0}")]
    Core(segre_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot write csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot serialize json: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<segre_core::Error> for CliError {
    fn from(e: segre_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(segre_core::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

/// A malformed document handed to one of the `format` parsers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("expected {0}")]
    Shape(&'static str),
    #[error("not an exact number: {0:?}")]
    Number(String),
    #[error("{0}")]
    Core(String),
}
