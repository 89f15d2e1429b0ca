//! Command-line front end.
//!
//! ```text
//! combstab analyze <file> [--oracle-denominator D] [--format table|machine] [--certificate]
//! combstab feasibility <file> [--format table|machine]
//! combstab grid <file> --denominator D [--format table|machine]
//! ```
//!
//! Exit codes: 0 when the analysis ran (whatever the verdict), 2 for a
//! validation error, 3 for a parse error, 1 for usage or internal errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::instance::parse_instance;
use crate::report::{run_analyze, run_feasibility, run_grid, AnalyzeOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "combstab",
    version,
    about = "Polarized slope stability of syzygy bundles on comb-like curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: invariants, restriction checks, catalog, verdict.
    Analyze {
        file: PathBuf,
        /// Cross-check with the grid oracle at this denominator.
        #[arg(long)]
        oracle_denominator: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Include the constraint system and certificate terms.
        #[arg(long)]
        certificate: bool,
    },
    /// Only the feasibility status.
    Feasibility {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search polarizations with denominator D.
    Grid {
        file: PathBuf,
        #[arg(long)]
        denominator: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse(_) => EXIT_PARSE,
        Error::Validation { .. }
        | Error::DimensionMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::MalformedSheaf { .. }
        | Error::InvalidPolarization(_) => EXIT_VALIDATION,
        Error::Inconsistent(_) => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Error> {
    let write = |out: &mut dyn Write, text: String| {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::Inconsistent(format!("cannot write output: {e}")))
    };
    match command {
        Command::Analyze {
            file,
            oracle_denominator,
            format,
            certificate,
        } => {
            let instance = parse_instance(&file)?;
            let options = AnalyzeOptions {
                oracle_denominator,
                certificate,
            };
            let report = run_analyze(&instance, &options)?;
            let text = match format {
                Format::Table => report.render_table(),
                Format::Machine => report.to_json() + "\n",
            };
            write(out, text)
        }
        Command::Feasibility { file, format } => {
            let instance = parse_instance(&file)?;
            let summary = run_feasibility(&instance)?;
            let text = match format {
                Format::Machine => {
                    serde_json::to_string_pretty(&summary).expect("serializable") + "\n"
                }
                Format::Table => {
                    let mut text = format!(
                        "status: {:?}\nverdict: {:?}\n",
                        summary.status, summary.verdict
                    );
                    if let Some(w) = &summary.witness {
                        text += &format!("witness: ({})\n", w.join(", "));
                    }
                    if let Some(c) = &summary.contradiction {
                        text += &format!("contradiction: {c}\n");
                    }
                    text
                }
            };
            write(out, text)
        }
        Command::Grid {
            file,
            denominator,
            format,
        } => {
            let instance = parse_instance(&file)?;
            let summary = run_grid(&instance, denominator)?;
            let text = match format {
                Format::Machine => {
                    serde_json::to_string_pretty(&summary).expect("serializable") + "\n"
                }
                Format::Table => match &summary.witness {
                    Some(w) => format!("D = {denominator}: found ({})\n", w.join(", ")),
                    None => format!("D = {denominator}: none found\n"),
                },
            };
            write(out, text)
        }
    }
}
