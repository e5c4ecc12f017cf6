use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "altexp", version, about = "Alternating exponential functions and their transforms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E, E⁺ and E⁻ for one weight at a list or lattice of points.
    Eval(EvalArgs),
    /// Finite transform: samples on the grid to coefficients.
    Forward(TransformArgs),
    /// Finite transform: coefficients to samples on the grid.
    Inverse(TransformArgs),
    /// Evaluate a coefficient expansion on a probe lattice in the closed
    /// fundamental domain.
    Interpolate(InterpolateArgs),
    /// Run the invariant suites and report residuals.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Weight λ, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "m", required_unless_present = "m")]
    pub lambda: Option<Vec<f64>>,
    /// Integer weight m, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub m: Option<Vec<i64>>,
    /// Expected dimension; must match the weight length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Lattice density: evaluate at k/N, k = 0..=N per axis, when no input is given.
    #[arg(long = "N", value_name = "N")]
    pub density: Option<usize>,
    /// Points file, one point per line, coordinates separated by commas or spaces.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FileFormat::Csv)]
    pub format: FileFormat,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// File format for input and output; inferred from the input extension
    /// when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FileFormat>,
    /// Expected dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Grid density; required for CSV input, checked against JSON input.
    #[arg(long = "N", value_name = "N")]
    pub density: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InterpolateArgs {
    #[command(flatten)]
    pub io: TransformArgs,
    /// Probe lattice density R: probes are k/R with 0 ≤ k ≤ R in the
    /// closed fundamental domain.
    #[arg(long, default_value_t = 16)]
    pub resolution: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Restrict to one dimension (default: 2 and 3).
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest grid density for the finite-transform suites.
    #[arg(long = "N", value_name = "N", default_value_t = 5)]
    pub density: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Replace every per-check tolerance with this value.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Torus quadrature points per axis.
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
    /// Half-width L of the box [-L, L]^n for the integral transform.
    #[arg(long, default_value_t = 6.0)]
    pub box_size: f64,
    /// Gauss–Legendre points per axis on the box.
    #[arg(long, default_value_t = 96)]
    pub quad_points: usize,
    /// Write the JSON report here.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Print the report to stdout as JSON instead of text.
    #[arg(long, value_enum)]
    pub format: Option<FileFormat>,
}
