use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hypwidth", version, about = "Width, thickness and diameter of convex bodies in hyperbolic space")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Tolerance for checks.
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub tol: f64,
    /// Direction grid size (default 720 for d = 2, 4096 for d = 3).
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Step halvings in the compass refinement; 0 disables refinement.
    #[arg(long, global = true, default_value_t = 40)]
    pub refine_iters: usize,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Spaces per indentation level in JSON output; 0 prints compact JSON.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a body and print it as a body document.
    Make(MakeArgs),
    /// Measure a body.
    Measure(MeasureArgs),
    /// Run a property check on a body.
    Check(CheckArgs),
    /// Reproduce a self-contained report.
    Paper(PaperArgs),
    /// Render a planar body in the Poincaré disk as SVG.
    Render(RenderArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Ball,
    Orthant,
    Triangle,
    Tetrahedron,
    Reuleaux,
    Example1,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordsArg {
    Klein,
    Hyperboloid,
}

#[derive(Args, Debug)]
pub struct MakeArgs {
    pub shape: Shape,
    /// Half edge length of the regular triangle or tetrahedron.
    #[arg(long, default_value_t = 1.0)]
    pub x: f64,
    /// Radius of a ball or orthant, distance of the arc in example1.
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// Width of a Reuleaux polygon.
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    /// Number of Reuleaux vertices (odd).
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Boundary samples (orthant, example1) or vertex count (random).
    #[arg(long)]
    pub n: Option<usize>,
    /// Half opening angle of the example1 arc, seen from its base point.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_3)]
    pub theta: f64,
    /// Ball center as comma-separated Klein coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub center: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = CoordsArg::Klein)]
    pub coords: CoordsArg,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Width,
    Thickness,
    Diameter,
    Maxwidth,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Plus,
    Minus,
}

/// Options shared by commands that read a body.
#[derive(Args, Debug, Clone)]
pub struct BodyOpts {
    /// Body document; `-` reads standard input.
    pub body: PathBuf,
    /// Samples used to discretize ball intersections (per arc in the plane,
    /// rays in space).
    #[arg(long)]
    pub discretize: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    pub measure: Measure,
    #[command(flatten)]
    pub body: BodyOpts,
    /// Hyperplane normal in hyperboloid coordinates (width only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "pencil")]
    pub normal: Option<Vec<f64>>,
    /// Pencil direction at the body's reference point, in the standard frame
    /// transported there (width only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub pencil: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = SideArg::Plus)]
    pub side: SideArg,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    ConstantWidth,
    ConstantDiameter,
    Complete,
    StrictlyConvex,
    ReducedFalsify,
    Theorem1,
    Theorem2,
    Claim1,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub check: Check,
    #[command(flatten)]
    pub body: BodyOpts,
    /// Target width or diameter; defaults to the measured diameter.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Boundary samples for the constant-diameter check.
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaperReport {
    SimplexTable,
    Remark2,
    Example1,
    Theorem3Chain,
}

#[derive(Args, Debug)]
pub struct PaperArgs {
    pub report: PaperReport,
    /// Half edge lengths for the simplex table.
    #[arg(long, value_delimiter = ',')]
    pub x: Option<Vec<f64>>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[command(flatten)]
    pub body: BodyOpts,
    /// SVG output file.
    #[arg(long, short)]
    pub out: PathBuf,
    /// Draw the thickness hyperplane.
    #[arg(long)]
    pub show_hyperplane: bool,
    /// Draw the segment from the farthest point to its foot on the
    /// thickness hyperplane.
    #[arg(long)]
    pub show_width_segment: bool,
}
