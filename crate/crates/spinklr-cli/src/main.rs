//! `spinklr`: batch front end for the spinklr computations.

mod commands;
mod output;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "spinklr", version, about = "Exact checks for quantum covering algebras and spin quiver Hecke algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Name of a built-in fixture.
    #[arg(long, global = true, conflicts_with = "datum_file")]
    pub builtin: Option<String>,
    /// Path to a quiver JSON file.
    #[arg(long, global = true)]
    pub datum_file: Option<PathBuf>,
    /// Weight such as `i:2,j:1` or `i,i,j`.
    #[arg(long, global = true)]
    pub weight: Option<String>,
    /// Degree cap of truncated computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub degree_cap: Option<i64>,
    /// Largest height when iterating over weights.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub height: Option<u32>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "SPINKLR_JOBS")]
    pub jobs: Option<NonZeroUsize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Cartan conditions and the Q-matrix properties.
    Validate,
    /// Gram matrix of the words of a weight, with its ranks at pi = +-1.
    Gram,
    /// Membership of the quantum Serre elements in the radical.
    SerreCheck(PairArgs),
    /// Graded dimensions of the rank-one nilHecke algebras.
    NilheckeDims {
        /// Number of strands; all of 1..=4 when omitted.
        #[arg(long)]
        n: Option<usize>,
        /// 0 for even, 1 for odd; both when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: Option<u8>,
    },
    /// Defining relations in the polynomial representation.
    RelationsVerify,
    /// Linear independence of the PBW elements.
    PbwVerify {
        /// Largest polynomial degree of the PBW elements.
        #[arg(long, default_value_t = spinklr::acceptance::PBW_WINDOW)]
        window: i64,
    },
    /// Pairing of two projective classes.
    Pair {
        /// Class such as `ii`, `i,j` or `i^2,j`.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Restriction of a word class to a pair of weights.
    Restrict {
        /// The word of the class.
        #[arg(long)]
        class: String,
        /// Weight of the left factor.
        #[arg(long)]
        left_weight: String,
    },
    /// The categorical Serre relation for a pair of nodes.
    CatSerre(PairArgs),
    /// Ranks of the Gram matrices at pi = +1 and pi = -1.
    TypeM,
    /// The full acceptance suite.
    ReportAll {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// Node name, or `odd`/`even` when that parity has a single node.
    #[arg(long)]
    pub i: Option<String>,
    #[arg(long)]
    pub j: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.run.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.get()).build_global() {
            eprintln!("cannot start {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = commands::dispatch(&cli.command, &cli.run);
    let code = match &outcome {
        Ok(report) if report.passed => 0,
        Ok(_) => 1,
        Err(_) => 2,
    };
    let value = match outcome {
        Ok(report) => report.body,
        Err(e) => serde_json::json!({"error": {"kind": e.kind(), "message": e.to_string()}}),
    };
    if let Err(e) = output::emit(&value, cli.run.format, cli.run.out.as_deref()) {
        eprintln!("cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
