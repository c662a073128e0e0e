use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Counts, formulas, identity checks, correlation reports and SVG
/// rendering for lozenge tilings.
#[derive(Debug, Parser)]
#[command(name = "lozenge", version)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count tilings (free-boundary matchings) of a region.
    Count(CountArgs),
    /// Evaluate a closed-form product.
    Formula(FormulaArgs),
    /// Check identities on random or structured instances.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Convergence reports for the dent correlations.
    #[command(subcommand)]
    Correlate(CorrelateCommand),
    /// Draw a region (and optionally one tiling) as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    Hexagon,
    Butterfly,
    Flashlight,
    ReducedFlashlight,
    Trapezoid,
}

#[derive(Debug, Clone, Args)]
pub struct RegionArgs {
    #[arg(long, value_enum, required_unless_present = "region_file")]
    pub region: Option<RegionKind>,
    /// Region in the text format (`col row U|D`, `FREE col row dir`, `CUT col row dir`).
    #[arg(long, conflicts_with = "region")]
    pub region_file: Option<PathBuf>,
    #[arg(long)]
    pub x: Option<u32>,
    #[arg(long)]
    pub y: Option<u32>,
    #[arg(long)]
    pub z: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long)]
    pub c: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Enum,
    Dp,
    Oracle,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub region: RegionArgs,
    #[arg(long, value_enum, default_value_t = Engine::Dp)]
    pub engine: Engine,
    /// Count only tilings invariant under these symmetries (`h`, `v`, `r`,
    /// comma separated); overrides `--engine`.
    #[arg(long, value_delimiter = ',')]
    pub symmetry: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    Macmahon,
    Spp,
    Flashlight,
    Butterfly,
    Corner,
    Bulk,
    BulkAsymptote,
    Glaisher,
}

#[derive(Debug, Clone, Args)]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    pub name: FormulaName,
    /// Parameters as `key=value` pairs, e.g. `x=4,z=3,k=2,p=1`.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long)]
    pub x: Option<u64>,
    #[arg(long)]
    pub y: Option<u64>,
    #[arg(long)]
    pub z: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long, env = "LOZENGE_DIGITS", default_value_t = 50)]
    pub digits: u32,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Condensation identities on seeded random graphs.
    Condensation(CondensationArgs),
    /// The flashlight recurrence, at one point or over the default grid.
    Recurrence(RecurrenceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CondensationArgs {
    #[arg(long)]
    pub identity: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Maximum number of vertices per graph.
    #[arg(long, default_value_t = 20)]
    pub budget: usize,
    /// `unit` or `rational` edge weights.
    #[arg(long, default_value = "rational")]
    pub weights: String,
}

#[derive(Debug, Clone, Args)]
pub struct RecurrenceArgs {
    #[arg(long, requires_all = ["z", "k", "p"])]
    pub x: Option<u32>,
    #[arg(long, requires = "x")]
    pub z: Option<u32>,
    #[arg(long, requires = "x")]
    pub k: Option<u32>,
    #[arg(long, requires = "x")]
    pub p: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<u64>,
    #[arg(long, env = "LOZENGE_DIGITS", default_value_t = 50)]
    pub digits: u32,
    /// Largest acceptable final deviation.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum CorrelateCommand {
    /// Finite-size corner ratios against their limit.
    Corner {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Exact bulk correlations against the large-k law.
    Bulk {
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Log-scale ratios of both correlations.
    Log {
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub region: RegionArgs,
    /// Draw the first tiling in enumeration order on top of the region.
    #[arg(long)]
    pub overlay: bool,
    /// Destination file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Pixels per lattice unit.
    #[arg(long, default_value_t = 24.0)]
    pub scale: f64,
}
