use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "limpack",
    version,
    about = "Limited packings and tuple domination in graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph file.
    Gen(GenArgs),
    /// Solve L_k (or the l-tuple domination number) exactly.
    Solve(SolveArgs),
    /// Build a k-limited packing with a heuristic or constructive method.
    Construct(ConstructArgs),
    /// Check a packing or tuple dominating set against a graph.
    Verify(VerifyArgs),
    /// Print the closed-form bounds for given parameters or a graph file.
    Bounds(BoundsArgs),
    /// Run a fixed benchmark suite.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    H6,
    Petersen,
    K4,
    Projective,
    RandomRegular,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Seed for random families; defaults to 0.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of disjoint copies.
    #[arg(long, default_value_t = 1)]
    pub copies: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Exact branch and bound; the only solver, accepted for clarity.
    #[arg(long)]
    pub exact: bool,
    /// Minimize an l-tuple dominating set instead.
    #[arg(long, requires = "l")]
    pub dominating: bool,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, required_unless_present = "dominating")]
    pub k: Option<usize>,
    /// Largest accepted vertex count.
    #[arg(long, default_value_t = limpack::exact::DEFAULT_MAX_VERTICES)]
    pub limit: usize,
    pub file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Cubic2,
    Greedy,
    SampleRepair,
    Lll,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long)]
    pub k: usize,
    /// Seed for randomized methods; defaults to 0.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampling probability; automatic when omitted.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = limpack::random::DEFAULT_MAX_ROUNDS)]
    pub max_rounds: u64,
    /// Write the reduction trace of `cubic2` here, one step per line.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "dominating")]
    pub k: Option<usize>,
    /// Vertex list, or a report containing a `witness:` line.
    #[arg(long)]
    pub packing: PathBuf,
    #[arg(long, requires = "l")]
    pub dominating: bool,
    #[arg(long)]
    pub l: Option<usize>,
    pub graph: PathBuf,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub maxdeg: Option<usize>,
    #[arg(long)]
    pub mindeg: Option<usize>,
    /// Average degree for the double-domination bound (parameter mode).
    #[arg(long)]
    pub avgdeg: Option<f64>,
    pub file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paper,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Leave out wall-clock columns so output is reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}
