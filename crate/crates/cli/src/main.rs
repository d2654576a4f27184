mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "gkm", version, about = "Exact GKM graph cohomology of the A2 and G2 flag manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Root system; defaults to g2, or to the system of --graph-file.
    #[arg(long, global = true, value_enum)]
    pub system: Option<System>,

    /// Largest polynomial degree for hilbert and verify.
    #[arg(long, global = true, default_value_t = 8)]
    pub k_max: u32,

    /// Seed for the randomized determinant test. GKM_SEED overrides it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Use the graph in this JSON file instead of the built-in one.
    #[arg(long, global = true)]
    pub graph_file: Option<PathBuf>,

    /// Worker threads for per-degree computations.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print the labeled graph (JSON or DOT).
    Graph,
    /// Test a class file against the divisibility condition.
    Check { class: PathBuf },
    /// Dump the generator classes.
    Generators,
    /// Graded ranks against the closed-form Hilbert series.
    Hilbert,
    /// Relations, presentation, parallel-edge and restriction checks.
    Verify,
    /// Write a class file in the module basis.
    Reduce { class: PathBuf },
    /// The basis monomials, their degrees and the independence verdict.
    Basis,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum System {
    A2,
    G2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

fn run(mut cli: Cli) -> Result<Outcome, CliError> {
    if let Ok(seed) = std::env::var("GKM_SEED") {
        cli.seed = seed.trim().parse().map_err(|_| CliError::Input(format!("GKM_SEED is not an integer: {seed:?}")))?;
    }
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    }
    commands::dispatch(&cli)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(outcome) => {
            let written = match &output {
                Some(path) => std::fs::write(path, &outcome.text),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            match outcome.failure {
                None => ExitCode::SUCCESS,
                Some(failure) => {
                    eprintln!("{}", failure.message());
                    ExitCode::from(failure.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
