//! File formats and command-line front end for `nullwave-core`.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;

pub use error::{CliError, CliResult};
