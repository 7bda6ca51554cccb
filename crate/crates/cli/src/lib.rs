//! The `emergent` command-line runner.
//!
//! Every subcommand resolves an [`ExperimentConfig`] (defaults, then the
//! optional `--config` JSON file, then flags), runs its checks and writes a
//! CSV or JSON report. Exit codes: 0 all checks passed, 1 a check failed,
//! 2 usage error, 3 I/O error, 4 malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use config::{ExperimentConfig, Format, DEFAULT_SEED, JOBS_ENV};
pub use error::{CliError, EXIT_CHECK_FAILED, EXIT_INPUT_FORMAT, EXIT_IO, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(name = "emergent", version, about = "Audits and limit experiments for emergent algebras")]
pub struct Cli {
    /// Seed for all sampled checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of random samples per check.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Schedule depth: scales 2^-1 .. 2^-depth.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON config file; flags take precedence over its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads (overrides the EMERGENT_JOBS environment variable).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Tolerance for floating-point limit comparisons.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irq axioms and the derived-operation identities on a model.
    Audit {
        /// heisenberg, euclidean:<k> or conjugated:default
        #[arg(long)]
        model: Option<String>,
    },
    /// Classification, Loos axioms and braid checks for an operation table.
    Finite {
        #[arg(long)]
        table: PathBuf,
        /// Properties that must hold for exit status 0.
        #[arg(long, value_enum, value_delimiter = ',')]
        require: Vec<Property>,
    },
    /// All quandles of order n up to isomorphism, as canonical tables.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Tangent-operation, A2 and metric-cone experiments.
    Converge {
        /// heisenberg, euclidean:<k> or conjugated:default
        #[arg(long)]
        model: Option<String>,
        #[arg(long, value_enum)]
        check: ConvergeCheck,
    },
    /// Point symmetries and the braid map S(x, y) = (σ^x y, x) on a model.
    Braid {
        /// heisenberg or euclidean:<k>
        #[arg(long)]
        model: Option<String>,
    },
    /// Derivative probes for maps between models.
    Pansu {
        #[arg(long, value_enum)]
        map: PansuMap,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    RightQuasigroup,
    Quasigroup,
    Idempotent,
    SelfDistributive,
    Rack,
    Quandle,
    Involutory,
    Loos,
    Braided,
    Nondegenerate,
    Involutive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConvergeCheck {
    Tangent,
    A2,
    Cone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PansuMap {
    /// The identity of the Heisenberg group.
    Identity,
    /// The graded automorphism (x, y, z) ↦ (y, x, −z).
    Swap,
    /// The point symmetry σ^x of the Heisenberg group at its centre.
    Sigma,
    /// The quadratic chart between flat planes.
    Chart,
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match commands::execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, CliError::Usage(_)) {
                let _ = writeln!(stderr, "run `emergent --help` for usage");
            }
            e.exit_code()
        }
    }
}
