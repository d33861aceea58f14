//! Front end for `gbell-core`: graph6 files, parallel sweeps, CSV and JSON
//! reports, and the `gbell` subcommands.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;
pub mod sweep;

pub use error::CliError;
