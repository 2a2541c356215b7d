//! r2reduce: list the reduction catalog, evaluate reductions and two-center
//! applications, and run seeded verification sweeps against the 2D oracle.
//!
//! Exit codes: 0 success, 1 failed verification records, 2 usage or
//! applicability errors, 3 quadrature non-convergence.

mod eval;
mod list;
mod verify;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use r2reduce::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "r2reduce", version, about = "Reductions of 2D quadrant integrals to 1D kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rule catalog.
    List(list::ListArgs),
    /// Evaluate one rule's reduced integral or a named application.
    Eval(eval::EvalArgs),
    /// Compare rules against the 2D oracle on seeded random instances.
    Verify(verify::VerifyArgs),
}

/// A failed command: the exit code and what to print on stderr.
#[derive(Debug)]
pub struct Exit {
    pub code: u8,
    pub message: String,
}

impl Exit {
    pub fn usage(message: impl Into<String>) -> Self {
        Exit {
            code: 2,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Exit {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonFinite { .. } | Error::Overflow(_) | Error::DivisionByZero => 3,
            _ => 2,
        };
        Exit {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::List(args) => list::run(&args),
        Command::Eval(args) => eval::run(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

/// CSV field, quoted when it holds a separator or a quote.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
