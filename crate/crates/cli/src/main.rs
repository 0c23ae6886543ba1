mod args;
mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Compute(e)
    }
}

fn open_output(cli: &Cli) -> Result<Box<dyn Write>, CliError> {
    Ok(match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out = open_output(&cli)?;
    match &cli.command {
        Command::Exact => {
            let e = commands::load_ensemble(&cli.input)?;
            commands::exact(&e, &mut out)?;
        }
        Command::Approx => {
            let method = commands::require_method(cli.method)?;
            let e = commands::load_ensemble(&cli.input)?;
            commands::approx(&e, method, &mut out)?;
        }
        Command::Distance => {
            let method = commands::require_method(cli.method)?;
            let e = commands::load_ensemble(&cli.input)?;
            commands::distance(&e, method, cli.metric, &mut out)?;
        }
        Command::Bounds { csv } => {
            let e = commands::load_ensemble(&cli.input)?;
            if commands::bounds(&e, *csv, &mut out)? {
                eprintln!("warning: degenerate ensemble, bounds are not applicable");
            }
        }
        Command::Sweep { grid } => commands::sweep(cli.input.m, grid, &mut out)?,
    }
    out.flush().context("cannot flush output")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
