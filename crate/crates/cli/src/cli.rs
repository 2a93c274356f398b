//! Command-line interface.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitloom_core::export::SvgStyle;
use orbitloom_core::orbits::{self, OrbitChain, OrbitLink, RationalizationPolicy};
use orbitloom_core::Point3;

use crate::doc::{parse_rational, BuiltCurve, CurveSpecDoc, LinkDoc, DEFAULT_MAX_DENOMINATOR};
use crate::error::AppError;
use crate::ops::{self, DataFormat, TubeOptions};

#[derive(Debug, Parser)]
#[command(
    name = "orbitloom",
    version,
    about = "Multicircular trajectory curves: sampling, symmetry, orbits and export"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curve evaluation.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Print the rotational symmetry order, rotation angle and residual.
    Symmetry(SymmetryArgs),
    /// Solar System helpers.
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Write drawings and meshes.
    #[command(subcommand)]
    Export(ExportCommand),
    /// Run the HTTP JSON service.
    Serve(ServeArgs),
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    /// Sample points along the curve.
    Sample(SampleArgs),
}

#[derive(Debug, Subcommand)]
pub enum OrbitCommand {
    /// Turn a chain of circular orbits into a curve spec.
    Chain(ChainArgs),
    /// Check T² = a³ over the planet table.
    Kepler3(Kepler3Args),
}

#[derive(Debug, Subcommand)]
pub enum ExportCommand {
    /// Multicoloured SVG drawing, one colour per arc.
    Svg(SvgArgs),
    /// Binary STL of a tube swept along the curve.
    Stl(StlArgs),
}

#[derive(Debug, Args)]
pub struct Source {
    /// Curve spec JSON file, or `-` for stdin.
    #[arg(
        long,
        value_name = "FILE",
        conflicts_with = "eq3",
        required_unless_present = "eq3"
    )]
    pub spec: Option<PathBuf>,
    /// Three-parameter family; a and b are rationals such as `7` or `7/2`.
    #[arg(long, value_name = "A,B,C", allow_hyphen_values = true)]
    pub eq3: Option<String>,
    /// Lift into space with this drift per unit parameter; overrides the spec.
    #[arg(long, value_name = "X,Y,Z", allow_hyphen_values = true)]
    pub drift: Option<String>,
    /// Largest denominator used when rationalizing orbital periods.
    #[arg(long, value_name = "D")]
    pub max_denominator: Option<u64>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub source: Source,
    /// Number of samples.
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    /// Parameter interval; one period by default.
    #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
    pub range: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SymmetryArgs {
    #[command(flatten)]
    pub source: Source,
    /// Print the full report as JSON.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    /// Links `radius,period,direction[,phase]` separated by `;`, innermost first.
    #[arg(long, value_name = "R,T,DIR;...", allow_hyphen_values = true)]
    pub links: String,
    /// Observer chain as a JSON array of links, or a planet name.
    #[arg(long, value_name = "FILE|PLANET")]
    pub view: Option<String>,
    #[arg(long, value_name = "D", default_value_t = DEFAULT_MAX_DENOMINATOR)]
    pub max_denominator: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Kepler3Args {
    /// Planet records as JSON instead of the built-in table.
    #[arg(long, value_name = "FILE")]
    pub planets: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SvgArgs {
    #[command(flatten)]
    pub source: Source,
    /// Number of arcs; the symmetry order by default.
    #[arg(long, value_name = "M")]
    pub arcs: Option<u64>,
    /// Samples per arc.
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Style JSON with stroke_width, palette, canvas_size and margin.
    #[arg(long, value_name = "FILE")]
    pub style: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StlArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_name = "R", default_value_t = 0.05)]
    pub tube_radius: f64,
    /// Vertices per cross-section.
    #[arg(long, value_name = "K", default_value_t = 16)]
    pub around: usize,
    /// Cross-sections along one period.
    #[arg(long, value_name = "N", default_value_t = 512)]
    pub along: usize,
    /// Multiplier applied to every coordinate.
    #[arg(long, value_name = "S", default_value_t = 1.0)]
    pub unit_scale: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "ORBITLOOM_PORT", default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: IpAddr,
    /// Serve files from this directory for non-API paths.
    #[arg(long = "static", value_name = "DIR")]
    pub static_dir: Option<PathBuf>,
}

/// Process exit status for an error.
pub fn exit_code(e: &AppError) -> i32 {
    match e {
        AppError::Validation(_) => 2,
        AppError::NonCommensurable(_) => 3,
        AppError::Io(_) => 1,
    }
}

pub fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Curve(CurveCommand::Sample(a)) => {
            let built = a.source.build()?;
            let range = a
                .range
                .as_deref()
                .map(|r| parse_list::<2>(r, "range"))
                .transpose()?;
            let line = ops::sample(&built, a.n, range)?;
            let format = match a.format {
                FormatArg::Csv => DataFormat::Csv,
                FormatArg::Json => DataFormat::Json,
            };
            let mut bytes = Vec::new();
            ops::write_samples(&line, format, &mut bytes)?;
            emit(&a.output, &bytes)
        }
        Command::Symmetry(a) => {
            let report = ops::symmetry(&a.source.build()?)?;
            let text = if a.json {
                serde_json::to_string_pretty(&report).map_err(io::Error::from)?
            } else {
                ops::symmetry_line(&report)
            };
            emit(&a.output, format!("{text}\n").as_bytes())
        }
        Command::Orbit(OrbitCommand::Chain(a)) => {
            let target = parse_links(&a.links)?;
            let observer = a.view.as_deref().map(load_view).transpose()?;
            let policy = RationalizationPolicy::MaxDenominator(a.max_denominator);
            let curve = orbits::relative_view(&target, observer.as_ref(), policy)?;
            let doc = CurveSpecDoc::from_curve(&curve);
            let text = serde_json::to_string_pretty(&doc).map_err(io::Error::from)?;
            emit(&a.output, format!("{text}\n").as_bytes())
        }
        Command::Orbit(OrbitCommand::Kepler3(a)) => {
            let planets = match &a.planets {
                Some(p) => orbits::load_planets(File::open(p)?)?,
                None => orbits::planet_table(),
            };
            emit(&a.output, kepler3_table(&planets).as_bytes())
        }
        Command::Export(ExportCommand::Svg(a)) => {
            let built = a.source.build()?;
            let style = match &a.style {
                Some(p) => serde_json::from_slice(&read_input(p)?)
                    .map_err(|e| AppError::Validation(format!("style: {e}")))?,
                None => SvgStyle::default(),
            };
            emit(&a.output, &ops::svg(&built, a.arcs, a.samples, &style)?)
        }
        Command::Export(ExportCommand::Stl(a)) => {
            let built = a.source.build()?;
            let opts = TubeOptions {
                radius: a.tube_radius,
                around: a.around,
                along: a.along,
                unit_scale: a.unit_scale,
            };
            emit(&a.output, &ops::stl(&built, &opts)?)
        }
        Command::Serve(a) => serve(a),
    }
}

impl Source {
    pub fn doc(&self) -> Result<CurveSpecDoc, AppError> {
        match (&self.spec, &self.eq3) {
            (Some(path), None) => CurveSpecDoc::parse(&read_input(path)?),
            (None, Some(s)) => {
                let parts: Vec<&str> = s.split(',').collect();
                let [a, b, c] = parts[..] else {
                    return Err(AppError::Validation(format!(
                        "--eq3 expects a,b,c, got `{s}`"
                    )));
                };
                let a = parse_rational(a).map_err(AppError::Validation)?;
                let b = parse_rational(b).map_err(AppError::Validation)?;
                let c: f64 = c
                    .trim()
                    .parse()
                    .map_err(|_| AppError::Validation(format!("--eq3: `{c}` is not a number")))?;
                Ok(CurveSpecDoc::eq3(a, b, c))
            }
            _ => Err(AppError::Validation(
                "give exactly one of --spec or --eq3".into(),
            )),
        }
    }

    pub fn build(&self) -> Result<BuiltCurve, AppError> {
        let mut built = self.doc()?.build(self.max_denominator)?;
        if let Some(d) = &self.drift {
            let d = parse_list::<3>(d, "drift")?;
            built.drift = Some(Point3::from(d));
        }
        Ok(built)
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, AppError> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf)?;
    } else {
        File::open(path)?.read_to_end(&mut buf)?;
    }
    Ok(buf)
}

fn emit(output: &Output, bytes: &[u8]) -> Result<(), AppError> {
    match &output.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(bytes)?;
            w.flush()?;
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn parse_list<const N: usize>(s: &str, what: &str) -> Result<[f64; N], AppError> {
    let bad = || {
        AppError::Validation(format!(
            "--{what} expects {N} comma-separated numbers, got `{s}`"
        ))
    };
    let values: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let arr: [f64; N] = values.try_into().map_err(|_| bad())?;
    if arr.iter().all(|v| v.is_finite()) {
        Ok(arr)
    } else {
        Err(bad())
    }
}

/// `r,T,dir[,phase]` entries separated by `;`.
pub fn parse_links(s: &str) -> Result<OrbitChain<f64>, AppError> {
    let mut links = Vec::new();
    for (i, entry) in s
        .split(';')
        .map(str::trim)
        .filter(|e| !e.is_empty())
        .enumerate()
    {
        let bad = |why: &str| AppError::Validation(format!("link {i} `{entry}`: {why}"));
        let parts: Vec<&str> = entry.split(',').map(str::trim).collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad("expected radius,period,direction[,phase]"));
        }
        let num = |p: &str| p.parse::<f64>().map_err(|_| bad("not a number"));
        let direction = match parts[2] {
            "+1" | "1" | "prograde" => orbits::Direction::Prograde,
            "-1" | "retrograde" => orbits::Direction::Retrograde,
            _ => return Err(bad("direction must be +1 or -1")),
        };
        let initial_phase = match parts.get(3) {
            Some(p) => num(p)?,
            None => 0.0,
        };
        links.push(OrbitLink {
            radius: num(parts[0])?,
            period: num(parts[1])?,
            direction,
            initial_phase,
        });
    }
    Ok(OrbitChain::new(links)?)
}

fn load_view(view: &str) -> Result<OrbitChain<f64>, AppError> {
    let path = Path::new(view);
    if !path.exists() {
        if let Some(p) = orbits::lookup(view) {
            return Ok(p.chain()?);
        }
    }
    let docs: Vec<LinkDoc> = serde_json::from_slice(&read_input(path)?)
        .map_err(|e| AppError::Validation(format!("--view: {e}")))?;
    Ok(OrbitChain::new(docs.iter().map(OrbitLink::from).collect())?)
}

pub fn kepler3_table(planets: &[orbits::PlanetRecord]) -> String {
    let report = orbits::kepler3_residuals(planets);
    let mut s = format!(
        "{:<10} {:>12} {:>10} {:>10}\n",
        "planet", "a_au", "t_years", "t2_a3"
    );
    for (p, (_, r)) in planets.iter().zip(&report.ratios) {
        s += &format!(
            "{:<10} {:>12.6} {:>10.4} {:>10.6}\n",
            p.name,
            p.radius_au(),
            p.period_years,
            r
        );
    }
    s += &format!("max_deviation={:.6}\n", report.max_deviation);
    s
}

fn serve(a: ServeArgs) -> Result<(), AppError> {
    let rt = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()?;
    rt.block_on(async move {
        let addr = SocketAddr::new(a.host, a.port);
        let listener = tokio::net::TcpListener::bind(addr).await?;
        eprintln!("orbitloom listening on http://{}", listener.local_addr()?);
        axum::serve(listener, crate::service::router(a.static_dir)).await
    })?;
    Ok(())
}
