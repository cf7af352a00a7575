//! Command-line front end for `bkmult-core`: run configuration, the
//! structure-constant cache, JSON reports and parallel verification.

pub mod cache;
pub mod config;
pub mod error;
pub mod report;
pub mod run;

pub use config::{Command, RunConfig};
pub use error::{exit, CliError, Result};
