//! `queens`: command-line front end for the genetic-algorithm N-Queens
//! solver. Three subcommands: `solve` runs the engine once, `verify` scores
//! an externally supplied placement, `bench` runs seed sweeps and writes
//! record files.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use queens_ga::{GaConfig, OperatorParams};

use commands::CmdError;

/// Process status for a run that finished but found no solution.
const EXIT_UNSOLVED: u8 = 2;
/// Process status for malformed command lines (sysexits EX_USAGE).
const EXIT_USAGE: u8 = 64;
/// Process status for parse or validation failures (sysexits EX_DATAERR).
const EXIT_DATA: u8 = 65;
/// Process status for file read/write failures (sysexits EX_IOERR).
const EXIT_IO: u8 = 74;

#[derive(Debug, Parser)]
#[command(name = "queens", version, about = "Genetic-algorithm N-Queens solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the solver once and print the best placement found.
    Solve(SolveArgs),
    /// Score a placement tuple and report its conflicts.
    Verify(VerifyArgs),
    /// Run a batch of solves and write one record per run.
    Bench(BenchArgs),
}

/// Engine parameters shared by `solve` and `bench`.
#[derive(Debug, Args)]
struct SolverOpts {
    /// Population size.
    #[arg(long = "pop-size", default_value_t = 1000)]
    pop_size: usize,

    /// Generation budget.
    #[arg(long, default_value_t = 5000)]
    max_generations: u64,

    /// Stop after this many generations without improvement; 0 disables.
    #[arg(long, default_value_t = 500)]
    stagnation_window: u64,

    /// Random seed (base seed for bench trials).
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Probability that a selected pair undergoes crossover.
    #[arg(long, default_value_t = 0.9)]
    crossover_prob: f64,

    /// Probability of the first mutation swap.
    #[arg(long, default_value_t = 0.8)]
    mutation_prob: f64,

    /// Probability of the second mutation swap.
    #[arg(long, default_value_t = 0.4)]
    double_mutation_prob: f64,

    /// Number of best members that always survive unchanged.
    #[arg(long, default_value_t = 1)]
    elitism: usize,
}

impl SolverOpts {
    fn to_config(&self, n: usize) -> GaConfig {
        GaConfig {
            n,
            population_size: self.pop_size,
            max_generations: self.max_generations,
            stagnation_window: (self.stagnation_window > 0).then_some(self.stagnation_window),
            operator_params: OperatorParams {
                crossover_prob: self.crossover_prob,
                mutation_prob: self.mutation_prob,
                double_mutation_prob: self.double_mutation_prob,
            },
            seed: self.seed,
            elitism_count: self.elitism,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Board size.
    #[arg(long)]
    n: usize,

    #[command(flatten)]
    solver: SolverOpts,

    /// Record output format.
    #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
    format: RecordFormat,

    /// Also print the board as ASCII art.
    #[arg(long)]
    render: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Placement tuple, e.g. "2,4,1,3" (parentheses and spaces allowed).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    tuple: Option<String>,

    /// Read the tuple from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Board sizes, comma separated (e.g. 8,20,50).
    #[arg(long = "n-list", value_delimiter = ',', required = true)]
    n_list: Vec<usize>,

    /// Runs per board size; trial t uses seed + t.
    #[arg(long, default_value_t = 10)]
    trials: u64,

    /// Record file path (created or truncated).
    #[arg(long)]
    out: PathBuf,

    /// Record file format.
    #[arg(long, value_enum, default_value_t = FileFormat::Csv)]
    format: FileFormat,

    #[command(flatten)]
    solver: SolverOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let status = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(status);
        }
    };

    let outcome = match &cli.command {
        Command::Solve(args) => commands::solve(args),
        Command::Verify(args) => commands::verify(args),
        Command::Bench(args) => commands::bench(args),
    };

    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_UNSOLVED),
        Err(CmdError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
        Err(CmdError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
