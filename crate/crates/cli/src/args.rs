use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use throttle_core::checks::Property;
use throttle_core::Variant;

/// Seed used by the random corpora when `--seed` is not given.
pub const DEFAULT_SEED: u64 = throttle_core::corpus::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "mdthrottle", version, about = "Exact metric dimension throttling numbers")]
pub struct Cli {
    /// Worker threads for constraint compilation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Also write a machine-readable JSON record to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write tabular output as CSV to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Throttling number of one graph.
    Compute(ComputeArgs),
    /// Throttling numbers across a one-parameter family, as CSV.
    Sweep(SweepArgs),
    /// Write the covering integer program for one radius in LP format.
    ExportIp(ExportArgs),
    /// Run an invariant suite over a graph corpus.
    Check(CheckArgs),
    /// Emit a verified landmark configuration as JSON.
    Construct(ConstructArgs),
    /// Build a hardness-reduction graph from a base graph.
    Reduce(ReduceArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge-list file (`n m` header, then `u v` lines) or a family such as
    /// `path:10`, `kbipartite:2,3`, `grid:P4xC6`, `complete:3+empty:2`.
    #[arg(long, short = 'g')]
    pub graph: String,
    /// One of dim, edim, mdim, custom
    #[arg(long, short = 'v', default_value = "dim")]
    pub variant: Variant,
    /// Target file for `--variant custom`: one target per line as vertex
    /// indices, `{}` for the empty target.
    #[arg(long, value_name = "PATH")]
    pub custom_targets: Option<PathBuf>,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Node limit shared by every solve of the run.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds shared by every solve of the run.
    #[arg(long)]
    pub budget_secs: Option<f64>,
    /// Report the lexicographically smallest optimal witness.
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Solve,
    Formula,
    Both,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Smallest radius allowed in the minimization.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
    pub r_min: u32,
    #[arg(long, value_enum, default_value_t = Mode::Solve)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    Hypercube,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::Path => "path",
            SweepFamily::Cycle => "cycle",
            SweepFamily::Complete => "complete",
            SweepFamily::Star => "star",
            SweepFamily::Empty => "empty",
            SweepFamily::Hypercube => "hypercube",
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: SweepFamily,
    /// First parameter (order, or dimension for hypercubes).
    #[arg(long)]
    pub from: usize,
    /// Last parameter, inclusive.
    #[arg(long)]
    pub to: usize,
    #[arg(long, short = 'v', default_value = "dim")]
    pub variant: Variant,
    /// For rows taken from closed forms, also run the solver when the
    /// parameter is at most this value.
    #[arg(long, default_value_t = 25)]
    pub spot_check_up_to: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Sensor radius.
    #[arg(long, short = 'r')]
    pub r: u32,
    /// Keep only rows that survive dominance reduction.
    #[arg(long)]
    pub reduced: bool,
    /// Output file (standard output when absent).
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// extremal-characterization, low-throttle, subtree-monotone, oracle-equivalence or reduction-identity
    pub property: Property,
    /// Order of the exhaustive corpus (extremal-characterization, low-throttle).
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Random samples (subtree-monotone) or instances (oracle-equivalence).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Largest order in random corpora.
    #[arg(long, default_value_t = 12)]
    pub max_order: usize,
    /// Seed for the random corpora
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Base graph for reduction-identity; repeatable.
    #[arg(long = "base", default_values_t = ["complete:1".to_string(), "complete:2".to_string(), "path:3".to_string()])]
    pub bases: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
    /// Also write the configuration's graph as an edge list.
    #[arg(long, global = true, value_name = "PATH")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Caterpillar tree with small throttling number.
    MinTree {
        #[arg(long)]
        n: usize,
    },
    /// Landmark layout on a cycle.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, short = 'v', default_value = "edim")]
        variant: Variant,
    },
    /// Landmark layout on a circulant graph.
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        connections: Vec<usize>,
    },
    /// Resolving set on a grid product.
    Grid {
        /// Grid family, e.g. `grid:P6xP6`.
        #[arg(long, short = 'g')]
        graph: String,
        #[arg(long, short = 'r')]
        r: u32,
    },
    /// Landmark layout on a spider.
    Spider {
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionKind {
    Mdt,
    Emdt,
    Mmdt,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, short = 'g')]
    pub graph: String,
    #[arg(long, value_enum)]
    pub kind: ReductionKind,
    /// Write the reduced graph as an edge list.
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
    /// Solve the reduced graph and compare with the predicted value.
    #[arg(long)]
    pub solve: bool,
}
