//! `ladders`: generate closed-form matrices for ladder-type graphs and
//! verify them against an exact elimination oracle.

mod commands;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ladder_core::export::parse_n_range;

#[derive(Debug, Parser)]
#[command(name = "ladders", version, about, propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit one matrix or scalar for a single instance.
    Generate(GenerateArgs),
    /// Run the full invariant suite for every instance in range.
    Verify(RangeArgs),
    /// Tabulate spanning-tree counts with an oracle column.
    Trees(RangeArgs),
    /// Tabulate Kirchhoff indices with an oracle column.
    Kirchhoff(RangeArgs),
    /// Sweep the sequence identities over a range of n.
    Identities(IdentityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ladder,
    Cl,
    Mobius,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Qplus,
    Lplus,
    Resistance,
    Incidence,
    Laplacian,
    Kirchhoff,
    Trees,
    Edges,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format; the default can be set with LADDERS_FORMAT.
    #[arg(long, value_enum, env = "LADDERS_FORMAT", default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn n_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    parse_n_range(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub matrix: Target,
    /// CSV only: omit the header row and the label column.
    #[arg(long)]
    pub bare: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub family: FamilyArg,
    /// A single n or an inclusive range such as 3..16.
    #[arg(long, value_parser = n_range)]
    pub n: RangeInclusive<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, value_parser = n_range, default_value = "0..200")]
    pub n: RangeInclusive<usize>,
    /// Restrict the sweep to one identity (default: all of them).
    #[arg(long)]
    pub id: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

/// How a command ended, mapped onto the process exit status.
pub enum Outcome {
    Pass(String),
    /// Report text plus one machine-readable record per failure.
    Fail(String, Vec<String>),
}

pub struct UsageError(pub String);

fn emit(text: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match &cli.command {
        Command::Generate(a) => (commands::generate(a), &a.output.out),
        Command::Verify(a) => (commands::verify(a), &a.output.out),
        Command::Trees(a) => (commands::trees(a), &a.output.out),
        Command::Kirchhoff(a) => (commands::kirchhoff(a), &a.output.out),
        Command::Identities(a) => (commands::identities(a), &a.output.out),
    };
    let (text, failures) = match result {
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Ok(Outcome::Pass(text)) => (text, Vec::new()),
        Ok(Outcome::Fail(text, failures)) => (text, failures),
    };
    if let Err(e) = emit(&text, out) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    for record in &failures {
        eprintln!("{record}");
    }
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
