//! The `ptegkit` command-line front end.
//!
//! Exit codes: 0 on success, 2 for unreadable or invalid input, 3 when a
//! trajectory is requested for an infeasible period.

mod commands;
mod envelope;
mod model;

pub use envelope::{feasible_set_json, ResultEnvelope};
pub use model::{ModelError, ModelFile, PlaceRecord, FORMAT_VERSION};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::pteg::Mode;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "ptegkit", version, about = "Periodic schedules of P-time event graphs")]
pub struct Cli {
    /// Print a JSON result envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide bounded consistency and print the 1-periodic period set.
    Check { model: PathBuf },
    /// Print the set of periods of d-periodic trajectories.
    Periods {
        model: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, default_value = "theorem2", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Synthesize and validate a d-periodic trajectory.
    Trajectory {
        model: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// `zero`, or a file of d·n rationals.
        #[arg(long, default_value = "zero")]
        u: String,
        /// Last step to print and check (default 3d).
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Check a given d-periodic trajectory against the model.
    Validate {
        model: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// File with d lines, each holding x(k) as n rationals.
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Print the precedence graph in DOT format.
    ExportDot {
        model: PathBuf,
        #[command(flatten)]
        which: DotMode,
    },
    /// Rewrite the model with every marking in {0, 1}.
    Normalize {
        model: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DotMode {
    /// Substitute this period into every arc weight.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Label arcs with their parametric envelopes.
    #[arg(long)]
    pub parametric: bool,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// Runs the CLI on `std::env::args`, writing to stdout and stderr.
pub fn run() -> u8 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI on the given arguments (including the program name).
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    commands::dispatch(&cli, &echo, out, err)
}
