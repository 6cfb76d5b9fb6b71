//! Command-line front end and file formats for `segre-core`.
//!
//! Every command builds a [`commands::Report`] that renders as JSON (an
//! [`envelope::OutputEnvelope`]), CSV, or a human-readable text block.

pub mod commands;
pub mod envelope;
pub mod error;
pub mod format;

pub use commands::{parse_spec, AlgorithmChoice, Report, ToricQuery};
pub use envelope::{OutputEnvelope, SCHEMA_VERSION};
pub use error::{CliError, FormatError};
