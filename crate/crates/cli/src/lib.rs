//! Front end for `tatebal`: file formats, reports and commands.

pub mod commands;
mod error;
pub mod format;
pub mod report;

pub use error::CliError;
