mod cli;
mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use cli::{Cli, Command};
use config::CliConfig;

const OUTPUT_DIR_VAR: &str = "CGWD_OUTPUT_DIR";

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Runs the command and emits its output; `Ok(false)` on a verification
/// failure.
fn execute(cli: &Cli) -> Result<bool> {
    let mut cfg = CliConfig::load(cli.config.as_deref())?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    cfg.validate()?;
    let (text, ext, verified) = match &cli.command {
        Command::Corpus { write } => (commands::corpus(write.as_deref())?, "json", true),
        command => {
            let outcome = commands::run(command, &cfg)?;
            (
                outcome.rendered.format(cfg.format)?,
                cfg.format.extension(),
                outcome.verified,
            )
        }
    };
    match std::env::var_os(OUTPUT_DIR_VAR) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(format!("{}.{ext}", cli.command.name()));
            std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(verified)
}
