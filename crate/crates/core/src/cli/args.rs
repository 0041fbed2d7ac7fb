use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "homforge",
    version,
    about = "Homomorphisms, cores, treewidth, grid minors and clique reductions"
)]
pub struct Cli {
    /// Emit one JSON document instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search-node limit for exhaustive searches.
    #[arg(long, global = true)]
    pub node_limit: Option<u64>,
    /// Wall-clock limit in milliseconds for exhaustive searches.
    #[arg(long, global = true, env = "HOMFORGE_BUDGET_MS")]
    pub time_limit_ms: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homomorphism search.
    #[command(subcommand)]
    Hom(HomCommand),
    /// Retract a structure onto its core.
    Core {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Treewidth of the Gaifman graph.
    #[command(subcommand)]
    Tw(TwCommand),
    /// Minor-map search.
    #[command(subcommand)]
    Minor(MinorCommand),
    /// Build reduction instances.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Sweep a reduction over all small graphs against solver oracles.
    Verify(VerifyArgs),
    /// Generate a built-in structure.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Subcommand)]
pub enum HomCommand {
    /// Find one homomorphism SOURCE → TARGET.
    Find { source: String, target: String },
    /// Count all homomorphisms SOURCE → TARGET.
    Count { source: String, target: String },
    /// Decide SOURCE → TARGET by dynamic programming over a min-fill tree decomposition.
    Td { source: String, target: String },
}

#[derive(Debug, Subcommand)]
pub enum TwCommand {
    /// Exact treewidth (at most 18 vertices).
    Exact {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Min-fill upper bound.
    Heur {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MinorCommand {
    /// Find a minor map H → G.
    Find {
        h: String,
        g: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find the k x k grid as a minor of G.
    Grid {
        g: String,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Clique gadget M(A, mu, G).
    Grohe {
        #[arg(long = "A")]
        a: String,
        /// Minor map from the k x K grid onto A; searched for when omitted.
        #[arg(long)]
        mu: Option<PathBuf>,
        #[arg(long = "G")]
        g: String,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Promise gadget X for a template.
    Pcsp {
        #[command(flatten)]
        template: TemplateArgs,
        #[arg(long = "G")]
        g: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Joined copies of G.
    Amplify {
        #[arg(long = "G")]
        g: String,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TemplateArgs {
    /// `grid:K:F` for typed grids, or `core` with --A and -k.
    #[arg(long)]
    pub template: String,
    /// Structure for the `core` template.
    #[arg(long = "A")]
    pub a: Option<String>,
    #[arg(short)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Grohe,
    Pcsp,
    Amplify,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: VerifyKind,
    /// Source structure (grohe) or template structure (pcsp with `core`).
    #[arg(long = "A")]
    pub a: Option<String>,
    /// Template for pcsp: `grid:K:F` or `core`.
    #[arg(long)]
    pub template: Option<String>,
    /// Largest graph order in the sweep.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(short)]
    pub k: Option<usize>,
    #[arg(short)]
    pub l: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    Clique {
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Grid {
        k: usize,
        l: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    TypedGrid {
        k: usize,
        l: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// G(n, p) graph seeded by --seed.
    Random {
        n: usize,
        p: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}
