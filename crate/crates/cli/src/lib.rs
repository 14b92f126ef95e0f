//! Command-line front end for `rlse-core`: reads algebra and event files,
//! runs checks, transforms and embeddability tests, and reports verdicts with
//! witnesses.
//!
//! Exit codes: 0 when every check passes (or the set is embeddable), 1 when a
//! check fails, 2 for usage and parse errors, 3 when the input violates a
//! precondition of the command.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
pub mod format;
pub mod report;

pub use report::{Report, EXIT_FAIL, EXIT_PASS, EXIT_PRECONDITION, EXIT_USAGE};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: format::ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rlse_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_precondition() => EXIT_PRECONDITION,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rlse",
    version,
    about = "Check ring-like structures of events, orthomodular lattices and numerical events"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Lattice of an RLSE.
    #[value(name = "l-of-r")]
    LOfR,
    /// Specific RLSE of an orthomodular lattice.
    #[value(name = "r-of-l")]
    ROfL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CatalogName {
    /// Boolean ring on N atoms (N ≤ 4).
    BooleanRing,
    /// Boolean lattice on N atoms (N ≤ 4).
    BooleanLattice,
    /// The orthomodular lattice MO_N.
    Mo,
    /// The specific RLSE of MO_N.
    SpecificMo,
    /// Weakly associative RLSE over MO2 with parameter C (index or name).
    #[value(name = "weakly-assoc-mo2")]
    WeaklyAssocMo2,
    /// Six-element ortholattice that is not orthomodular.
    Hexagon,
    /// MO2 as a concrete logic over four states.
    #[value(name = "concrete-mo2")]
    ConcreteMo2,
    /// All subsets of N states as events.
    BooleanEvents,
    /// {0, p, p', 1} with p = (1/3, 2/3).
    FourElementEvents,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run axiom checks on an algebra file.
    Check {
        path: PathBuf,
        /// Comma-separated checks or law names; defaults to the standard battery.
        #[arg(long, value_delimiter = ',')]
        laws: Vec<String>,
        /// List every failing tuple of a failed law, not only the first.
        #[arg(long)]
        all_failures: bool,
    },
    /// Convert between an RLSE and its orthomodular lattice.
    Transform {
        #[arg(value_enum)]
        direction: Direction,
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a set of events is Boolean embeddable.
    Embeddable {
        events: PathBuf,
        /// Ambient family the events must belong to.
        #[arg(long, required_unless_present = "two_valued", conflicts_with = "two_valued")]
        ambient: Option<PathBuf>,
        /// Two-valued events, infimum read as pointwise minimum.
        #[arg(long)]
        two_valued: bool,
        /// Comma-separated event names; defaults to every event in the file.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    /// Write a catalog object in the algebra or event file format.
    Catalog {
        #[arg(value_enum)]
        name: CatalogName,
        param: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the max–min structure of a closed event family.
    Qcheck { events: PathBuf },
}

fn dispatch(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Check { path, laws, all_failures } => commands::check(path, laws, *all_failures),
        Command::Transform { direction, path, output } => commands::transform(*direction, path, output.as_ref()),
        Command::Embeddable { events, ambient, subset, .. } => commands::embeddable(events, ambient.as_ref(), subset),
        Command::Catalog { name, param, output } => commands::catalog(*name, param.as_deref(), output.as_ref()),
        Command::Qcheck { events } => commands::qcheck(events),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let written = match cli.format {
                OutputFormat::Text => out.write_all(report.text.as_bytes()),
                OutputFormat::Json => writeln!(out, "{}", report.json),
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> u8 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
