//! `gauss-sieve`: run constructions and verifications described by a JSON
//! config.
//!
//! Exit status is 0 when every check passes, 2 when a verification fails,
//! and 1 for unreadable or invalid configs.

mod commands;
mod config;
mod error;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use crate::commands::Outcome;
use crate::error::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "gauss-sieve",
    version,
    about = "Gauss congruences, q-Gauss congruences and cyclic sieving"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct Io {
    /// JSON job description.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a-, b- and c-sequences.
    Seq(Io),
    /// Check polynomial families for q-Gauss congruence.
    Qgauss(Io),
    /// Verify a cyclic sieving phenomenon on generated objects.
    Csp(Io),
    /// Round-trip tubings through their lattice-path bijections.
    Bijection(Io),
    /// Tabulate festoon counts by number of beads.
    Riordan(Io),
}

fn load<T: DeserializeOwned>(io: &Io) -> Result<T> {
    let path = io.config.display().to_string();
    let text = fs::read_to_string(&io.config).map_err(|source| CliError::Read { path, source })?;
    Ok(serde_json::from_str(&text)?)
}

fn emit(io: &Io, outcome: &Outcome) -> Result<()> {
    let text = match io.format {
        Format::Json => serde_json::to_string_pretty(&outcome.json)? + "\n",
        Format::Table => outcome.table.clone(),
    };
    match &io.out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Write {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: &Command) -> Result<bool> {
    let (io, outcome) = match command {
        Command::Seq(io) => (io, commands::cmd_seq(&load(io)?)?),
        Command::Qgauss(io) => (io, commands::cmd_qgauss(&load(io)?)?),
        Command::Csp(io) => (io, commands::cmd_csp(&load(io)?)?),
        Command::Bijection(io) => (io, commands::cmd_bijection(&load(io)?)?),
        Command::Riordan(io) => (io, commands::cmd_riordan(&load(io)?)?),
    };
    log::debug!("job finished, passed = {}", outcome.passed);
    emit(io, &outcome)?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
