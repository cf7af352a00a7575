use std::path::PathBuf;

use bkmult_core::{SystemId, DEFAULT_GROUP_CAP};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    Constant { u: String, v: String },
    Decompositions { count_only: bool, allow_identity: bool },
    Crosscheck,
}

/// A validated invocation.
///
/// Defaults: `k_max` is the rank, `threads` is 1, no cache, report on
/// stdout, group cap [`DEFAULT_GROUP_CAP`].
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub system: SystemId,
    pub command: Command,
    pub k_max: usize,
    pub threads: usize,
    pub cache: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub deterministic: bool,
    pub group_cap: usize,
}

impl RunConfig {
    pub fn new(system: &str, command: Command) -> Result<Self> {
        let system: SystemId = system.parse()?;
        Ok(RunConfig {
            system,
            command,
            k_max: system.rank(),
            threads: 1,
            cache: None,
            out: None,
            deterministic: false,
            group_cap: DEFAULT_GROUP_CAP,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(CliError::Config("--k-max must be at least 1".into()));
        }
        if self.threads == 0 {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        let order = self.system.group_order();
        if order > self.group_cap {
            return Err(bkmult_core::Error::GroupTooLarge { order, cap: self.group_cap }.into());
        }
        Ok(())
    }
}
