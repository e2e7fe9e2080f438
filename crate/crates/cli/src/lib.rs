//! Argument handling and dispatch for the `geoforge` binary.
//!
//! Every subcommand reads one scene file, builds one structure and writes one
//! document. Exit status: 0 on success, 1 when the input is rejected, 2 on a
//! usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use geoforge::beta_skeleton::{beta_skeleton, BetaParameter};
use geoforge::floating_body::{dupin_floating_body, AreaFraction, DEFAULT_DIRECTIONS};
use geoforge::fractals::{sierpinski_carpet, sierpinski_triangle, MAX_CARPET_DEPTH, MAX_TRIANGLE_DEPTH};
use geoforge::io::ipe::emit_ipe;
use geoforge::io::svg::emit_svg;
use geoforge::io::{parse_scene, Overlay, RenderStyle, Scene};
use geoforge::onion::OnionDecomposition;
use geoforge::quadtree::{PointQuadtree, PrQuadtree};
use geoforge::trapmap::TrapezoidalMap;
use geoforge::triangulation::{sample_points, triangulate, SampleRequest};
use geoforge::{BBox, Polygon};
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "geoforge", version, about = "Build planar geometric structures from scene files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Point quadtree over the scene points, in input order
    Quadtree(IoArgs),
    /// Point-region quadtree over the scene points
    PrQuadtree {
        #[command(flatten)]
        io: IoArgs,
        /// Leaf capacity (at least 1)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        capacity: u64,
        /// Root region as xmin,ymin,xmax,ymax
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<BBox>,
    },
    /// Trapezoidal map of the scene segments
    Trapmap {
        #[command(flatten)]
        io: IoArgs,
        /// Bounding box as xmin,ymin,xmax,ymax
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<BBox>,
    },
    /// Convex layers of the scene points
    Onion(IoArgs),
    /// Lune-based beta-skeleton of the scene points
    BetaSkeleton {
        #[command(flatten)]
        io: IoArgs,
        /// Shape parameter, any finite number greater than 0
        #[arg(long, value_parser = parse_beta)]
        beta: f64,
    },
    /// Dupin and convex floating bodies of the single scene polygon
    FloatingBody {
        #[command(flatten)]
        io: IoArgs,
        /// Cut-off area fraction in (0, 0.5]
        #[arg(long, value_parser = parse_delta)]
        delta: f64,
        /// Number of sampled cut directions (at least 3)
        #[arg(long, default_value_t = DEFAULT_DIRECTIONS as u64, value_parser = clap::value_parser!(u64).range(3..))]
        directions: u64,
    },
    /// Ear-clipping triangulation of the single scene polygon
    Triangulate(IoArgs),
    /// Uniform random points in the single scene polygon
    Sample {
        #[command(flatten)]
        io: IoArgs,
        /// Number of points (at least 1)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Generator seed
        #[arg(long)]
        seed: u64,
    },
    /// Sierpinski triangle from the single scene triangle
    SierpinskiTriangle {
        #[command(flatten)]
        io: IoArgs,
        /// Subdivision depth
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=MAX_TRIANGLE_DEPTH as i64))]
        depth: u32,
    },
    /// Sierpinski carpet over a box
    SierpinskiCarpet {
        #[command(flatten)]
        io: OptionalInputArgs,
        /// Subdivision depth
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=MAX_CARPET_DEPTH as i64))]
        depth: u32,
        /// Seed square as xmin,ymin,xmax,ymax; defaults to the scene bbox
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<BBox>,
    },
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Scene file
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct OptionalInputArgs {
    /// Scene file
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output path, `-` for standard output
    #[arg(long, default_value = "-")]
    output: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Svg,
    Ipe,
}

fn parse_beta(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(b) if b.is_finite() && b > 0.0 => Ok(b),
        _ => Err("beta must be a finite number in the range (0, inf)".into()),
    }
}

fn parse_delta(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(d) if d > 0.0 && d <= 0.5 => Ok(d),
        _ => Err("delta must lie in the range (0, 0.5]".into()),
    }
}

fn parse_bbox(s: &str) -> Result<BBox, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("expected xmin,ymin,xmax,ymax: {e}"))?;
    match v[..] {
        [a, b, c, d] => BBox::new(a, b, c, d).map_err(|e| e.to_string()),
        _ => Err("expected four numbers xmin,ymin,xmax,ymax".into()),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invalid(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) => f.write_str(m),
        }
    }
}

impl From<geoforge::Error> for Failure {
    fn from(e: geoforge::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn read_scene(path: &Path) -> Result<Scene, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_scene(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn only_polygon(scene: &Scene) -> Result<Polygon, Failure> {
    match &scene.polygons[..] {
        [p] => Ok(p.clone()),
        ps => Err(Failure::Invalid(format!("scene must hold exactly one polygon, found {}", ps.len()))),
    }
}

fn require_points(scene: &Scene) -> Result<(), Failure> {
    if scene.points.is_empty() {
        return Err(Failure::Invalid("scene has no points".into()));
    }
    Ok(())
}

fn build(command: Command) -> Result<(Scene, Overlay, OutputArgs), Failure> {
    Ok(match command {
        Command::Quadtree(io) => {
            let scene = read_scene(&io.input)?;
            let t = PointQuadtree::build(&scene.points)?;
            (scene, Overlay::PointQuadtree(t), io.out)
        }
        Command::PrQuadtree { io, capacity, bbox } => {
            let scene = read_scene(&io.input)?;
            let t = PrQuadtree::build(&scene.points, bbox.or(scene.bbox), capacity as usize)?;
            (scene, Overlay::PrQuadtree(t), io.out)
        }
        Command::Trapmap { io, bbox } => {
            let scene = read_scene(&io.input)?;
            let m = TrapezoidalMap::build(&scene.segments, bbox.or(scene.bbox))?;
            (scene, Overlay::Trapmap(m), io.out)
        }
        Command::Onion(io) => {
            let scene = read_scene(&io.input)?;
            require_points(&scene)?;
            let o = OnionDecomposition::build(&scene.points)?;
            (scene, Overlay::Onion(o), io.out)
        }
        Command::BetaSkeleton { io, beta } => {
            let scene = read_scene(&io.input)?;
            require_points(&scene)?;
            let g = beta_skeleton(&scene.points, BetaParameter::new(beta)?)?;
            (scene, Overlay::Skeleton(g), io.out)
        }
        Command::FloatingBody { io, delta, directions } => {
            let scene = read_scene(&io.input)?;
            let poly = only_polygon(&scene)?;
            let fb = dupin_floating_body(&poly, AreaFraction::new(delta)?, directions as usize)?;
            (scene, Overlay::FloatingBody(fb), io.out)
        }
        Command::Triangulate(io) => {
            let scene = read_scene(&io.input)?;
            let triangulation = triangulate(&only_polygon(&scene)?)?;
            (scene, Overlay::Triangulation { triangulation, samples: Vec::new() }, io.out)
        }
        Command::Sample { io, count, seed } => {
            let scene = read_scene(&io.input)?;
            let triangulation = triangulate(&only_polygon(&scene)?)?;
            let samples = sample_points(&triangulation, SampleRequest::new(count as usize, seed)?)?;
            (scene, Overlay::Triangulation { triangulation, samples }, io.out)
        }
        Command::SierpinskiTriangle { io, depth } => {
            let scene = read_scene(&io.input)?;
            let f = sierpinski_triangle(&only_polygon(&scene)?, depth)?;
            (scene, Overlay::Fractal(f), io.out)
        }
        Command::SierpinskiCarpet { io, depth, bbox } => {
            let scene = match &io.input {
                Some(path) => read_scene(path)?,
                None => Scene::default(),
            };
            let seed = bbox
                .or(scene.bbox)
                .ok_or_else(|| Failure::Usage("sierpinski-carpet needs --bbox or a scene with a bbox".into()))?;
            let f = sierpinski_carpet(&seed, depth)?;
            (scene, Overlay::Fractal(f), io.out)
        }
    })
}

/// Renders the requested document without touching the filesystem.
fn render(scene: &Scene, overlay: &Overlay, format: Format) -> Result<String, Failure> {
    let style = RenderStyle::default();
    Ok(match format {
        Format::Json => overlay.to_json() + "\n",
        Format::Svg => emit_svg(scene, Some(overlay), &style)?,
        Format::Ipe => emit_ipe(scene, Some(overlay), &style)?,
    })
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed run never leaves a partial document.
fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (scene, overlay, out) = build(cli.command)?;
    let text = render(&scene, &overlay, out.format)?;
    let io_err = |e: std::io::Error| Failure::Invalid(format!("{}: {e}", out.output.display()));
    if out.output.as_os_str() == "-" {
        stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(io_err)
    } else {
        write_atomic(&out.output, &text).map_err(io_err)
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            // help and version go to stdout like any other requested output
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            match f {
                Failure::Usage(_) => EXIT_USAGE,
                Failure::Invalid(_) => EXIT_INVALID,
            }
        }
    }
}
