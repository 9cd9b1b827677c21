//! Command-line front end for `qmatrix-core`.

pub mod commands;
pub mod config;
pub mod error;
pub mod literal;
pub mod output;

use config::{Cli, Command, RunConfig};
use error::CliResult;
use serde_json::Value;

/// Execute a parsed command line and return the full output document.
pub fn execute(cli: &Cli) -> CliResult<(Value, RunConfig)> {
    let cfg = RunConfig::resolve(&cli.flags)?;
    let result = match cli.command {
        Command::Classify => commands::cmd_classify(&cfg)?,
        Command::Pidegree => commands::cmd_pidegree(&cfg)?,
        Command::Center => commands::cmd_center(&cfg)?,
        Command::Rep { action } => commands::cmd_rep(&cfg, action)?,
        Command::Iso => commands::cmd_iso(&cfg)?,
        Command::Sweep => commands::cmd_sweep(&cfg)?,
    };
    Ok((output::envelope(cli.command.name(), result), cfg))
}
