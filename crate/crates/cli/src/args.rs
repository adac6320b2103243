use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ndl",
    version,
    about = "Normalized distance Laplacian spectra, bound verification and extremal search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, env = "NDL_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of each input graph.
    Spectrum(InputArgs),
    /// Exhaustively check the spectral bounds on all connected graphs of a size.
    Verify(VerifyArgs),
    /// Spectral radius of barbell graphs.
    Sweep(SweepArgs),
    /// Hill-climb toward a graph with large spectral radius.
    Climb(ClimbArgs),
    /// Compare the spectral radius with the diameter bound.
    Audit(InputArgs),
    /// Objective values and balance conditions at the top harmonic eigenvector.
    Objectives(ObjectivesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Paper,
    All,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Edge-list file or graph6 corpus (one token per line).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    #[arg(long, value_name = "K1,P,K2")]
    pub barbell: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Vertex count for exhaustive enumeration.
    #[arg(long, required_unless_present = "input")]
    pub n: Option<usize>,

    /// graph6 corpus to check instead of enumerating.
    #[arg(long, conflicts_with = "n")]
    pub input: Option<PathBuf>,

    #[arg(long, default_value_t = ndl_core::search::DEFAULT_TOL)]
    pub tol: f64,

    /// Allow n = 8 (2^28 labeled graphs).
    #[arg(long)]
    pub unsafe_large: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// One or more vertex counts, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,

    #[arg(long, value_enum, default_value_t = Family::Paper)]
    pub family: Family,
}

#[derive(Debug, Args)]
pub struct ClimbArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct ObjectivesArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Balance threshold for the condition checks.
    #[arg(long, default_value_t = ndl_core::rayleigh::DEFAULT_EPSILON)]
    pub epsilon: f64,
}
