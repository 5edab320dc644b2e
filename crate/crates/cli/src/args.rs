use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use costzdd::{ExtInt, PathKind};

#[derive(Debug, Parser)]
#[command(name = "costzdd", version, about = "Enumerate all cost-bounded paths of a graph with zero-suppressed decision diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write graph instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build and save the diagram of all s-t paths.
    Build(BuildArgs),
    /// Filter the family by a cost bound and report one row.
    Bound(BoundArgs),
    /// Run several bounds on one bounding session.
    Sweep(SweepArgs),
    /// Count the members of a saved diagram.
    Count(CountArgs),
    /// Minimum and maximum solution cost.
    Minmax(InstanceArgs),
    /// Draw uniform random members.
    Sample(SampleArgs),
    /// Number of solutions costing at most a given value.
    Rank(RankArgs),
    /// Emit the rows of a named experiment.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Square grid with corner terminals and random edge costs.
    Grid {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000, allow_hyphen_values = true)]
        cost_lo: i64,
        #[arg(long, default_value_t = 1999, allow_hyphen_values = true)]
        cost_hi: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rewrite a graph with its edges in breadth-first order from the source.
    Bfs {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Simple,
    Hamiltonian,
}

impl From<Kind> for PathKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Simple => PathKind::Simple,
            Kind::Hamiltonian => PathKind::Hamiltonian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naive,
    Memo,
    Interval,
    Intersection,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Memo => "memo",
            Method::Interval => "interval",
            Method::Intersection => "intersection",
        }
    }
}

#[derive(Debug, Args)]
pub struct Terminals {
    /// Source vertex; defaults to the graph file's `t` line.
    #[arg(long)]
    pub source: Option<u32>,
    /// Target vertex; defaults to the graph file's `t` line.
    #[arg(long)]
    pub target: Option<u32>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[command(flatten)]
    pub terminals: Terminals,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// A graph plus its feasible family, either loaded or built on the spot.
#[derive(Debug, Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Saved diagram whose items are the graph's edges.
    #[arg(long, conflicts_with = "kind", required_unless_present = "kind")]
    pub zdd: Option<PathBuf>,
    /// Build the path diagram instead of loading one.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[command(flatten)]
    pub terminals: Terminals,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Cost bound; `-inf` and `+inf` are accepted.
    #[arg(short = 'b', long = "bound", allow_hyphen_values = true)]
    pub bound: ExtInt,
    #[arg(long, value_enum, default_value_t = Method::Interval)]
    pub method: Method,
    /// Largest number of calls the naive method may make.
    #[arg(long, default_value_t = 100_000_000)]
    pub naive_limit: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Bounds as multiples of the minimum cost, e.g. 1.00,1.10,1.50.
    #[arg(long, value_delimiter = ',', conflicts_with = "bounds", required_unless_present = "bounds")]
    pub ratios: Vec<f64>,
    /// Absolute bounds; `-inf` and `+inf` are accepted.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bounds: Vec<ExtInt>,
    #[arg(long, value_enum, default_value_t = Method::Interval)]
    pub method: Method,
    #[arg(long, default_value_t = 100_000_000)]
    pub naive_limit: u64,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub zdd: PathBuf,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub zdd: PathBuf,
    #[arg(short, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub cost: ExtInt,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// One of us48-ham, us48-simple, grid8-ham, grid10-ham, grid6-simple, grid7-simple.
    #[arg(long)]
    pub preset: String,
    /// US map graph file, required by the us48 presets.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Seed of the grid edge costs.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Methods to run; each gets its own session over all rows.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "interval")]
    pub methods: Vec<Method>,
    /// Replace the preset's row ratios.
    #[arg(long, value_delimiter = ',')]
    pub ratios: Option<Vec<f64>>,
    /// Leave out the final maximum-cost row.
    #[arg(long)]
    pub no_max_row: bool,
    #[command(flatten)]
    pub terminals: Terminals,
    #[arg(long, default_value_t = 100_000_000)]
    pub naive_limit: u64,
}
