//! Command-line front end for `lexraf-core`.
//!
//! Subcommands: `rank`, `check`, `verify`, `demo` and `normalize`. Exit codes
//! are 0 on success, 1 when an axiom check or a verification fails and 2 on
//! any input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod document;
pub mod parallel;
pub mod render;

pub use document::InputDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] lexraf_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Debug, Parser)]
#[command(name = "lexraf", version, about = "Preferences over random availability functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RelationName {
    /// Lexicographic in priority order
    Lex,
    /// Maximum expected pay-off
    Mep,
    /// Weighted log-product
    Wlog,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the RAFs of a document from best to worst
    Rank(RankArgs),
    /// Audit a relation against the axioms on a sample
    Check(CheckArgs),
    /// Enumerate all weak orders of a grid and keep those satisfying the axioms
    #[command(alias = "verify-characterization")]
    Verify(VerifyArgs),
    /// Walk through the $40/$10 example
    Demo,
    /// Re-emit a document in canonical form
    Normalize(NormalizeArgs),
}

#[derive(Debug, Args)]
pub struct RankArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub relation: RelationName,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Document whose RAFs form the sample (alternative to --grid)
    #[arg(conflicts_with = "grid")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub relation: RelationName,
    /// Comma-separated levels of a product grid, e.g. 0,1/2,1
    #[arg(long, alias = "levels", requires = "arity")]
    pub grid: Option<String>,
    #[arg(long)]
    pub arity: Option<usize>,
    /// Comma-separated axiom names, or `all`
    #[arg(long, default_value = "all")]
    pub axioms: String,
    /// Grid pay-offs in priority order (default 40, 10, 5/2, ...)
    #[arg(long)]
    pub payoffs: Option<String>,
    /// Grid weights in priority order (default all 1)
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Seed for sampled quadruple checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Quadruple draws for samples above the exhaustive cap
    #[arg(long, default_value_t = 20_000)]
    pub samples: u64,
    /// Largest sample checked exhaustively by quadruple axioms
    #[arg(long, default_value_t = 12)]
    pub exhaustive_cap: usize,
    /// Report every violation instead of the first
    #[arg(long)]
    pub all_violations: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated grid levels, e.g. 0,1/2,1
    #[arg(long, alias = "grid")]
    pub levels: String,
    #[arg(long)]
    pub arity: usize,
    #[arg(long, default_value = "SM,WeakIWA")]
    pub axioms: String,
    /// Skip candidates breaking strong monotonicity while building them
    #[arg(long)]
    pub prune: bool,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = lexraf_core::characterization::DEFAULT_MAX_POINTS)]
    pub max_points: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Omit elapsed time so output is byte-for-byte reproducible
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct NormalizeArgs {
    pub input: PathBuf,
}

/// Runs a parsed command, writing to `out`; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Rank(args) => commands::rank(&args, out),
        Command::Check(args) => commands::check(&args, out),
        Command::Verify(args) => commands::verify(&args, out),
        Command::Demo => commands::demo(out),
        Command::Normalize(args) => commands::normalize(&args, out),
    }
}
