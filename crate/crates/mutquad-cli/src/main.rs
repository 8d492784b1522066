//! `mutquad` — render mutated quadratic iterations, run parameter sweeps,
//! and export images plus topology metrics.
//!
//! Exit status: 0 on success, 2 on usage errors (bad flags, unknown preset,
//! inconsistent radii), 1 on runtime/I-O failures. The `MUTQUAD_THREADS`
//! environment variable caps the worker-thread count (default: machine
//! parallelism).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mutquad::dynamics::{MutationSpec, RSchedule};
use mutquad::io::{metrics_csv, write_image, write_metrics, ImageFormat};
use mutquad::presets::{find_preset, preset_catalog};
use mutquad::raster::{GridSpec, DEFAULT_MAX_ITER};
use mutquad::sweep::{run_sweep, Reference, SweepAxis, SweepConfig, SweepResult};
use mutquad::Complex64;

#[derive(Parser)]
#[command(name = "mutquad", version, about = "Mutated quadratic iterations: renders, sweeps, metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render one map to an image (and optionally a one-row metrics CSV)
    Render(RenderArgs),
    /// Run a preset sweep: one image per point plus an optional metrics CSV
    Sweep(JobArgs),
    /// Run a preset sweep and write only the metrics CSV
    Metrics(JobArgs),
    /// List the built-in presets
    Preset,
}

#[derive(Args)]
struct RenderArgs {
    /// Mutant parameter as RE,IM
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0,0")]
    c0: Complex64,
    /// Intact parameter as RE,IM
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0,0")]
    c1: Complex64,
    /// Mutation radius
    #[arg(long, default_value_t = 0.0)]
    r: f64,
    /// Transition radius
    #[arg(long = "R", default_value_t = 0.0)]
    big_r: f64,
    /// Mutation focus as RE,IM
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0,0")]
    focus: Complex64,
    /// constant | linear:SLOPE
    #[arg(long, value_parser = parse_schedule, default_value = "constant")]
    schedule: RSchedule,
    /// Compare the mask against a plain render
    #[arg(long, value_enum, default_value_t = RefChoice::None)]
    reference: RefChoice,
    #[command(flatten)]
    view: ViewArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct JobArgs {
    /// Preset name (see `mutquad preset`)
    #[arg(long)]
    preset: String,
    /// Override the preset's mutant parameter (RE,IM)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    c0: Option<Complex64>,
    /// Override the preset's intact parameter (RE,IM)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    c1: Option<Complex64>,
    /// Override the base mutation radius
    #[arg(long)]
    r: Option<f64>,
    /// Override the base transition radius
    #[arg(long = "R")]
    big_r: Option<f64>,
    /// Override the mutation focus (RE,IM)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    focus: Option<Complex64>,
    /// Override the schedule: constant | linear:SLOPE
    #[arg(long, value_parser = parse_schedule)]
    schedule: Option<RSchedule>,
    /// Override the reference mask
    #[arg(long, value_enum)]
    reference: Option<RefChoice>,
    #[command(flatten)]
    view: ViewOverrideArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ViewArgs {
    /// Viewport as XMIN,XMAX,YMIN,YMAX
    #[arg(long, value_parser = parse_viewport, allow_hyphen_values = true, default_value = "-2,2,-2,2")]
    grid: Viewport,
    /// Raster size as WIDTHxHEIGHT
    #[arg(long, value_parser = parse_size, default_value = "800x800")]
    size: RasterSize,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITER)]
    max_iter: u32,
}

#[derive(Args)]
struct ViewOverrideArgs {
    /// Override the viewport (XMIN,XMAX,YMIN,YMAX)
    #[arg(long, value_parser = parse_viewport, allow_hyphen_values = true)]
    grid: Option<Viewport>,
    /// Override the raster size (WIDTHxHEIGHT)
    #[arg(long, value_parser = parse_size)]
    size: Option<RasterSize>,
    #[arg(long = "max-iter")]
    max_iter: Option<u32>,
}

#[derive(Args)]
struct OutArgs {
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatChoice::Pgm)]
    format: FormatChoice,
    /// Also write the metrics CSV
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatChoice {
    Pgm,
    Png,
}

#[derive(Clone, Copy, ValueEnum)]
enum RefChoice {
    Intact,
    Mutant,
    None,
}

impl From<RefChoice> for Reference {
    fn from(choice: RefChoice) -> Self {
        match choice {
            RefChoice::Intact => Reference::Intact,
            RefChoice::Mutant => Reference::Mutant,
            RefChoice::None => Reference::None,
        }
    }
}

impl FormatChoice {
    fn as_format(self) -> ImageFormat {
        match self {
            FormatChoice::Pgm => ImageFormat::Pgm,
            FormatChoice::Png => ImageFormat::Png,
        }
    }

    fn extension(self) -> &'static str {
        match self {
            FormatChoice::Pgm => "pgm",
            FormatChoice::Png => "png",
        }
    }
}

#[derive(Clone, Copy)]
struct Viewport {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

#[derive(Clone, Copy)]
struct RasterSize {
    width: usize,
    height: usize,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got '{s}'"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("bad imaginary part: {e}"))?;
    Ok(Complex64::new(re, im))
}

fn parse_schedule(s: &str) -> Result<RSchedule, String> {
    if s == "constant" {
        return Ok(RSchedule::Constant);
    }
    if let Some(slope) = s.strip_prefix("linear:") {
        let slope: f64 = slope.parse().map_err(|e| format!("bad slope: {e}"))?;
        return Ok(RSchedule::LinearInStep { slope });
    }
    Err(format!("expected 'constant' or 'linear:SLOPE', got '{s}'"))
}

fn parse_viewport(s: &str) -> Result<Viewport, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected XMIN,XMAX,YMIN,YMAX, got '{s}'"));
    }
    let mut vals = [0.0f64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part.trim().parse().map_err(|e| format!("bad bound '{part}': {e}"))?;
    }
    Ok(Viewport {
        x_min: vals[0],
        x_max: vals[1],
        y_min: vals[2],
        y_max: vals[3],
    })
}

fn parse_size(s: &str) -> Result<RasterSize, String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got '{s}'"))?;
    let width = w.parse().map_err(|e| format!("bad width: {e}"))?;
    let height = h.parse().map_err(|e| format!("bad height: {e}"))?;
    Ok(RasterSize { width, height })
}

#[derive(Debug)]
enum CliError {
    /// Bad arguments or configuration: exit status 2.
    Usage(String),
    /// Render- or write-time failure: exit status 1.
    Runtime(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn make_grid(view: Viewport, size: RasterSize) -> Result<GridSpec, CliError> {
    GridSpec::new(
        view.x_min, view.x_max, view.y_min, view.y_max, size.width, size.height,
    )
    .map_err(usage)
}

fn run_and_write(
    cfg: &SweepConfig,
    stem: &str,
    out: &OutArgs,
    images: bool,
    csv: bool,
) -> Result<SweepResult, CliError> {
    let result = run_sweep(cfg).map_err(usage)?;
    std::fs::create_dir_all(&out.out)
        .map_err(|e| CliError::Runtime(format!("creating {}: {e}", out.out.display())))?;
    if images {
        for (index, point) in result.points.iter().enumerate() {
            let name = format!("{stem}_{index:02}.{}", out.format.extension());
            let path = out.out.join(name);
            write_image(&point.field, &path, out.format.as_format())
                .map_err(|e| CliError::Runtime(e.to_string()))?;
        }
    }
    if csv {
        let path = out.out.join(format!("{stem}.csv"));
        write_metrics(&result, &path).map_err(|e| CliError::Runtime(e.to_string()))?;
    }
    Ok(result)
}

fn render(args: &RenderArgs) -> Result<(), CliError> {
    let spec = MutationSpec::new(args.c0, args.c1, args.r, args.big_r, args.focus)
        .and_then(|s| s.with_schedule(args.schedule))
        .map_err(usage)?;
    let grid = make_grid(args.view.grid, args.view.size)?;
    if args.view.max_iter == 0 {
        return Err(CliError::Usage("--max-iter must be positive".into()));
    }
    let cfg = SweepConfig {
        base: spec,
        grid,
        max_iter: args.view.max_iter,
        axis: SweepAxis::TransitionRadius,
        values: vec![spec.big_r],
        reference: args.reference.into(),
    };
    let result = run_and_write(&cfg, "render", &args.out, true, args.out.csv)?;
    let report = &result.points[0].report;
    println!(
        "render: {} components, area {:.6}",
        report.component_count, report.area
    );
    Ok(())
}

fn job_config(args: &JobArgs) -> Result<(SweepConfig, String), CliError> {
    let preset = find_preset(&args.preset)
        .ok_or_else(|| CliError::Usage(format!("unknown preset '{}'", args.preset)))?;
    let mut cfg = preset.config;

    let mut base = cfg.base;
    if let Some(c0) = args.c0 {
        base.c0 = c0;
    }
    if let Some(c1) = args.c1 {
        base.c1 = c1;
    }
    if let Some(r) = args.r {
        base.r = r;
    }
    if let Some(big_r) = args.big_r {
        base.big_r = big_r;
    }
    if let Some(focus) = args.focus {
        base.focus = focus;
    }
    if let Some(schedule) = args.schedule {
        base.schedule = schedule;
    }
    base.validate().map_err(usage)?;
    cfg.base = base;

    if let Some(view) = args.view.grid {
        let size = RasterSize {
            width: cfg.grid.width,
            height: cfg.grid.height,
        };
        cfg.grid = make_grid(view, size)?;
    }
    if let Some(size) = args.view.size {
        let view = Viewport {
            x_min: cfg.grid.x_min,
            x_max: cfg.grid.x_max,
            y_min: cfg.grid.y_min,
            y_max: cfg.grid.y_max,
        };
        cfg.grid = make_grid(view, size)?;
    }
    if let Some(max_iter) = args.view.max_iter {
        if max_iter == 0 {
            return Err(CliError::Usage("--max-iter must be positive".into()));
        }
        cfg.max_iter = max_iter;
    }
    if let Some(reference) = args.reference {
        cfg.reference = reference.into();
    }
    cfg.validate().map_err(usage)?;
    Ok((cfg, args.preset.clone()))
}

fn sweep(args: &JobArgs) -> Result<(), CliError> {
    let (cfg, stem) = job_config(args)?;
    let result = run_and_write(&cfg, &stem, &args.out, true, args.out.csv)?;
    println!("{stem}: {} points written to {}", result.points.len(), args.out.out.display());
    Ok(())
}

fn metrics(args: &JobArgs) -> Result<(), CliError> {
    let (cfg, stem) = job_config(args)?;
    let result = run_and_write(&cfg, &stem, &args.out, false, true)?;
    print!("{}", metrics_csv(&result));
    Ok(())
}

fn list_presets() -> Result<(), CliError> {
    let mut out = String::new();
    for preset in preset_catalog() {
        let cfg = &preset.config;
        let axis = match cfg.axis {
            SweepAxis::TransitionRadius => "vary R",
            SweepAxis::MutationRadius => "vary r",
            SweepAxis::MutationRadiusFixedThickness => "vary r, R-r fixed",
        };
        let schedule = match cfg.base.schedule {
            RSchedule::Constant => String::new(),
            RSchedule::LinearInStep { slope } => format!(", schedule R_n = {slope}*n"),
        };
        let _ = writeln!(
            out,
            "{:6} c0 = {:+.3}{:+.3}i  c1 = {:+.3}{:+.3}i  focus = {:+.2}{:+.2}i  {} over {:?}{}",
            preset.name,
            cfg.base.c0.re,
            cfg.base.c0.im,
            cfg.base.c1.re,
            cfg.base.c1.im,
            cfg.base.focus.re,
            cfg.base.focus.im,
            axis,
            cfg.values,
            schedule,
        );
    }
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version, 2 for usage errors
            e.exit();
        }
    };

    if let Ok(threads) = std::env::var("MUTQUAD_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                if let Err(e) = mutquad::init_worker_threads(n) {
                    eprintln!("error: configuring {n} worker threads: {e}");
                    return ExitCode::from(1);
                }
            }
            _ => {
                eprintln!("error: MUTQUAD_THREADS must be a positive integer, got '{threads}'");
                return ExitCode::from(2);
            }
        }
    }

    let outcome = match &cli.command {
        Command::Render(args) => render(args),
        Command::Sweep(args) => sweep(args),
        Command::Metrics(args) => metrics(args),
        Command::Preset => list_presets(),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
