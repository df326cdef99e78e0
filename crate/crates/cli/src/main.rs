//! `zzsynth` command-line frontend.
//!
//! Exit codes: 0 success or PASS, 1 verification FAIL, 2 unreadable or
//! malformed input, 3 input that is well formed but cannot be honored.

mod angle;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use angle::AngleArg;

#[derive(Parser)]
#[command(name = "zzsynth", version, about = "Compile, verify and schedule ZZ-based gate sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a source into a gate-sequence text file.
    Compile {
        #[command(flatten)]
        source: SourceArgs,
        /// Output file; the sequence goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare a gate sequence with a target unitary up to global phase.
    Verify {
        /// Gate-sequence text file.
        sequence: PathBuf,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Build a refocusing schedule that keeps a single coupling.
    Schedule {
        /// Coupling graph JSON file.
        #[arg(long)]
        graph: PathBuf,
        /// Spin pair as `k,l` (1-based).
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        /// Base free-evolution time in seconds.
        #[arg(long, allow_hyphen_values = true)]
        tau: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Laser phases for the six-pulse ion implementation of ZZ(lambda).
    Ion {
        /// Coupling angle, in radians or as a multiple of pi (e.g. `pi/2`).
        #[arg(long, allow_hyphen_values = true)]
        lambda: AngleArg,
        /// Free choice of phi2.
        #[arg(long, default_value = "0pi", allow_hyphen_values = true)]
        phi2: AngleArg,
    },
    /// Coherence orders and subspace of a product-operator expression.
    Classify {
        /// For example "2 I1x I2x" or "0.5 I1x + 0.5 I1y".
        operator: String,
        /// Number of spins; defaults to the largest index used.
        #[arg(long)]
        spins: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Algorithm {
    /// One Grover iterate: oracle, then inversion about the mean.
    Grover,
    WalshHadamard,
    /// Phase `--phase` on basis state `--marked`.
    ConditionalPhase,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct SourceKind {
    /// Phase vector JSON file.
    #[arg(long)]
    pub phases: Option<PathBuf>,
    /// Z-polynomial JSON file.
    #[arg(long)]
    pub zpoly: Option<PathBuf>,
    /// Truth table JSON file (Deutsch-Jozsa oracle).
    #[arg(long)]
    pub truth_table: Option<PathBuf>,
    /// u(2) matrix JSON file; the gate applies u to the last of `--qubits`.
    #[arg(long)]
    pub cu: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub algorithm: Option<Algorithm>,
}

#[derive(Args)]
pub struct SourceArgs {
    #[command(flatten)]
    pub kind: SourceKind,
    #[arg(long)]
    pub qubits: Option<usize>,
    /// Marked basis index, 0-based with qubit 1 as the most significant bit.
    #[arg(long)]
    pub marked: Option<usize>,
    #[arg(long, default_value = "pi", allow_hyphen_values = true)]
    pub phase: AngleArg,
    /// Unitarity tolerance when reading a u(2) file.
    #[arg(long, default_value_t = 1e-10)]
    pub unitarity_tol: f64,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected k,l")?;
    let k = a.trim().parse().map_err(|_| format!("bad spin index '{a}'"))?;
    let l = b.trim().parse().map_err(|_| format!("bad spin index '{b}'"))?;
    Ok((k, l))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Semantic(#[from] zzsynth::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 3,
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Compile { source, output } => commands::compile(&source, output.as_ref()),
        Command::Verify { sequence, source, tol } => commands::verify(&sequence, &source, tol),
        Command::Schedule { graph, pair, tau, output } => commands::schedule(&graph, pair, tau, output.as_ref()),
        Command::Ion { lambda, phi2 } => commands::ion(lambda, phi2),
        Command::Classify { operator, spins } => commands::classify(&operator, spins),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
