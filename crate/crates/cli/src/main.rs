//! `incidence`: command-line access to the character engines and their oracles.

mod commands;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "incidence", version, about = "Exact characters, splitting types, Han–Monsky products and WLP tests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character of h^i(D^d R(e)) on P^{n−1}.
    Coh(commands::CohArgs),
    /// Principal parts on the projective line.
    Pparts {
        #[command(subcommand)]
        command: commands::PpartsCommand,
    },
    /// Graded Han–Monsky products.
    Hm {
        #[command(subcommand)]
        command: commands::HmCommand,
    },
    /// Weak Lefschetz test for k[T_1..T_n]/(T_i^{e_i}).
    Wlp(commands::WlpArgs),
    /// Compare an engine against its linear-algebra oracle.
    Verify(commands::VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add elapsed_ms to the JSON envelope.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] incidence::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(incidence::Error::Invariant(_)) => 4,
            CliError::Engine(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

/// What a command computed, ready to render.
pub struct Report {
    command: &'static str,
    parameters: Value,
    result: Value,
    table: String,
    /// Set when the command detected a disagreement or broken invariant.
    breach: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    parameters: &'a Value,
    result: &'a Value,
    version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn emit(report: &Report, out: &OutputArgs, started: Instant) -> Result<(), CliError> {
    let text = match out.format {
        Format::Json => {
            let envelope = Envelope {
                command: report.command,
                parameters: &report.parameters,
                result: &report.result,
                version: format!("incidence {}", incidence::VERSION),
                elapsed_ms: out.timing.then(|| started.elapsed().as_millis()),
            };
            serde_json::to_string_pretty(&envelope).expect("values serialize") + "\n"
        }
        Format::Table => report.table.clone(),
    };
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (report, out) = match cli.command {
        Command::Coh(args) => (commands::coh(&args), args.out),
        Command::Pparts { command } => command.run(),
        Command::Hm { command } => command.run(),
        Command::Wlp(args) => (commands::wlp(&args), args.out),
        Command::Verify(args) => (commands::verify(&args), args.out),
    };
    let outcome = report.and_then(|r| emit(&r, &out, started).map(|()| r.breach));
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
