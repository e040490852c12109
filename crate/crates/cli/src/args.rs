use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::parse::{
    grid_points, list_points, parse_complex, parse_interval, parse_object, parse_real, parse_structure, Object, Points,
    StructureSpec,
};
use crate::table::Format;

/// Band-limited majorants and minorants vanishing at prescribed points.
#[derive(Debug, Parser)]
#[command(name = "bsv", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Digits after the decimal point; overrides BSV_PRECISION (default 12).
    #[arg(long, global = true)]
    pub precision: Option<usize>,

    /// Report errors as a JSON object on standard error.
    #[arg(long, global = true)]
    pub error_json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Least integral κ of the extremal function and its coefficients.
    Kappa(KappaArgs),
    /// Sample a constructed function on a real grid.
    Eval(EvalArgs),
    /// Closed-form Fourier transform of F with a discrete-probe residual.
    Spectrum(SpectrumArgs),
    /// Selberg majorant and minorant integral identities and grid extrema.
    Selberg(SelbergArgs),
    /// Integral excess of a vanishing majorant over a range of δ.
    RhoScan(RhoScanArgs),
    /// Root u* of 4 sinh u − sinh 2u − u.
    Threshold,
    /// Extremal nonnegative trigonometric polynomial on the unit circle.
    Trig(TrigArgs),
    /// Two-point extremal problem in a de Branges space.
    Debranges(DebrangesArgs),
    /// Run a built-in verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct KappaArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub delta: f64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// One of F, C, c, G_alpha, C_alpha, C_multi, minorant.
    #[arg(long, value_parser = parse_object)]
    pub object: Object,
    /// Real sample points as start:stop:step.
    #[arg(long, value_parser = grid_points, allow_hyphen_values = true)]
    pub grid: Points,
    /// Prescribed point(s); repeat or separate with commas for C_multi.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, value_delimiter = ',')]
    pub alpha: Vec<Complex64>,
    /// Target value F(α) (object F only).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Option<Complex64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub delta: f64,
    /// Interval a,b for the Selberg-based objects.
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    pub interval: Option<(f64, f64)>,
    /// Convex weights for C_multi, comma-separated.
    #[arg(long, value_parser = parse_real, value_delimiter = ',')]
    pub weights: Vec<f64>,
    /// Minorant construction.
    #[arg(long, value_enum, default_value_t = MinorantKind::Additive)]
    pub mode: MinorantKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MinorantKind {
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MajorantKind {
    Additive,
    Multiplicative,
    Multipoint,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub delta: f64,
    /// Frequencies as start:stop:step.
    #[arg(long, value_parser = grid_points, allow_hyphen_values = true)]
    pub grid: Points,
    /// Half-width of the probe's sampling window (default 4000/δ + |Re α|).
    #[arg(long, value_parser = parse_real)]
    pub probe_half_width: Option<f64>,
    /// Probe sample spacing (default 0.05/δ).
    #[arg(long, value_parser = parse_real)]
    pub probe_step: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SelbergArgs {
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    pub interval: (f64, f64),
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub delta: f64,
    /// Quadrature tolerance for the integral identities.
    #[arg(long, value_parser = parse_real, default_value = "1e-8")]
    pub tolerance: f64,
    /// Grid points on [a − 20/δ, b + 20/δ] for the extrema.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct RhoScanArgs {
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    pub interval: (f64, f64),
    /// Prescribed point(s); repeat or separate with commas.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub alpha: Vec<Complex64>,
    /// Comma-separated δ values or start:stop:step.
    #[arg(long, value_parser = list_points)]
    pub deltas: Points,
    #[arg(long, value_enum)]
    pub mode: MajorantKind,
}

#[derive(Debug, Args)]
pub struct TrigArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
}

#[derive(Debug, Args)]
pub struct DebrangesArgs {
    /// exponential:B, linear or linear_exponential:B,OMEGA.
    #[arg(long, value_parser = parse_structure, allow_hyphen_values = true)]
    pub structure: StructureSpec,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kernel,
    Extremal,
    Spectrum,
    Selberg,
    Vanishing,
    Trig,
    Debranges,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}
