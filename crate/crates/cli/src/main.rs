//! `bmlab`: build graphs, compute exact curvature, test Bonnet-Myers
//! sharpness and run the structural checks on sharp graphs.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use bmlab_core::{CheckError, FamilyError, GraphError, SharpnessError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sharpness(#[from] SharpnessError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// A verification ran and something failed; the report is already printed.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Check(CheckError::NotSharp(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bmlab", version, about = "Exact Ollivier-Ricci curvature and Bonnet-Myers sharpness on regular graphs")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "BMLAB_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct InputArgs {
    /// Family spec such as `johnson(6,3)` or `product(q3,q3)`, or a graph file
    /// (edge list or JSON).
    input: String,

    /// Read the input as a JSON family spec (inline or from a file).
    #[arg(long)]
    spec_json: bool,

    /// Only accept family specs from the sharp-graph catalog.
    #[arg(long)]
    catalog: bool,
}

impl InputArgs {
    fn mode(&self) -> input::InputMode {
        input::InputMode { spec_json: self.spec_json, catalog: self.catalog }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurvatureFormat {
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family graph and write it as an edge list.
    Build {
        spec: String,
        #[arg(long)]
        spec_json: bool,
        #[arg(long)]
        catalog: bool,
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact curvature of every edge.
    Curvature {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = CurvatureFormat::Tsv)]
        format: CurvatureFormat,
    },
    /// Minimum curvature against 2/diameter.
    Sharpness {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run every structural check; one JSON report per line.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Seeded good transport maps per directed edge, besides the canonical one.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        seeds: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Full-length geodesics per pole for the transport chain check.
        #[arg(long, default_value_t = 128)]
        geodesics: usize,
    },
    /// Poles, antipoles and self-centeredness.
    Poles {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start {} worker threads: {e}", cli.jobs)))?;
    pool.install(|| match cli.command {
        Command::Build { spec, spec_json, catalog, output } => {
            commands::build(&spec, input::InputMode { spec_json, catalog }, output.as_deref())
        }
        Command::Curvature { input, format } => commands::curvature(&input.input, input.mode(), format),
        Command::Sharpness { input } => commands::sharpness(&input.input, input.mode()),
        Command::Verify { input, seeds, seed, geodesics } => {
            let opts = bmlab_core::CheckOptions { samples: seeds as usize, seed, geodesic_limit: geodesics };
            commands::verify(&input.input, input.mode(), &opts)
        }
        Command::Poles { input } => commands::poles(&input.input, input.mode()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bmlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
