//! Command-line front end for the `postlie` toolkit.
//!
//! Every command returns an [`Outcome`]; parse problems come back as [`CliError`].

mod commands;
mod files;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::{
    catalog_emit, catalog_list, check, classify3, decompose, pa_check, parse_param, rb_check, rb_derive, verify_types,
};
pub use files::{load_algebra, load_operator, read_json, write_json, AlgebraFile, BracketEntry, OperatorFile, Term};

/// Exit code for a mathematical falsification.
pub const EXIT_FALSIFIED: i32 = 1;
/// Exit code for malformed input.
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("Jacobi identity fails on ({}, {}, {})", labels[0], labels[1], labels[2])]
    Jacobi { labels: [String; 3] },
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Format(_) => EXIT_MALFORMED,
            CliError::Jacobi { .. } | CliError::Math(_) => EXIT_FALSIFIED,
        }
    }
}

/// Report text plus exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    pub fn ok(report: String) -> Self {
        Outcome { code: 0, report }
    }

    pub fn falsified(report: String) -> Self {
        Outcome {
            code: EXIT_FALSIFIED,
            report,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "postlie", version, about = "Exact checks for Rota-Baxter operators and post-Lie structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra file and print its invariants.
    Check { algebra: PathBuf },
    /// Check the Rota-Baxter identity on all basis pairs.
    RbCheck { algebra: PathBuf, operator: PathBuf },
    /// Write the derived bracket of an operator as an algebra file.
    RbDerive {
        algebra: PathBuf,
        operator: PathBuf,
        out: PathBuf,
    },
    /// Check the post-Lie axioms of the product x.y = {Rx, y}.
    PaCheck { algebra: PathBuf, operator: PathBuf },
    /// Split the algebra into ker R, ker(R + id) and the rest.
    Decompose { algebra: PathBuf, operator: PathBuf },
    /// Identify a 3-dimensional algebra.
    Classify3 { algebra: PathBuf },
    /// List or emit builtin algebras and operators.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Verify the witness operators for the eight types on sl2 + sl2.
    #[command(name = "verify-thm41")]
    VerifyTypes {
        /// Type label: 1 to 8, 8a or 8b.
        #[arg(long = "type", value_name = "N", conflicts_with = "all", required_unless_present = "all")]
        ty: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Emit {
        name: String,
        /// Parameter override `key=value` with a rational value.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check { algebra } => check(algebra),
        Command::RbCheck { algebra, operator } => rb_check(algebra, operator),
        Command::RbDerive { algebra, operator, out } => rb_derive(algebra, operator, out),
        Command::PaCheck { algebra, operator } => pa_check(algebra, operator),
        Command::Decompose { algebra, operator } => decompose(algebra, operator),
        Command::Classify3 { algebra } => classify3(algebra),
        Command::Catalog { action: CatalogAction::List } => Ok(catalog_list()),
        Command::Catalog {
            action: CatalogAction::Emit { name, params, out_dir },
        } => catalog_emit(name, params, out_dir),
        Command::VerifyTypes { ty, .. } => verify_types(ty.as_deref()),
    }
}

/// Parses arguments and runs; clap errors map to exit 2 and are rendered into the report.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(&cli.command) {
            Ok(o) => o,
            Err(e) => Outcome {
                code: e.exit_code(),
                report: format!("error: {e}\n"),
            },
        },
        Err(e) => Outcome {
            code: if e.use_stderr() { EXIT_MALFORMED } else { 0 },
            report: e.render().to_string(),
        },
    }
}
