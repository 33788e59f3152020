//! Command-line front end: evaluate mappings, dump boundary spectra, render
//! disk images, and run the verification suite.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex;

use alphakit::boundary::spectrum_from_boundary;
use alphakit::mapping::{eval_series, solve_dirichlet};
use alphakit::schema::{BoundarySchema, InputDocument, SpectrumSchema};
use alphakit::verify::{run_suite, VerifyConfig};
use alphakit::{
    Alpha64, Boundary64, Error as KitError, MapEvaluation, Point64, Policy64, Spectrum64,
};

type C = Complex<f64>;

#[derive(Parser)]
#[command(
    name = "alphakit",
    about = "Kernel α-harmonic mappings of the unit disk: evaluation, rendering, verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a mapping (spectrum or boundary JSON) at chosen points; emits CSV.
    Eval(EvalArgs),
    /// Extract the coefficient spectrum of a boundary; emits spectrum JSON.
    Coeffs(CoeffsArgs),
    /// Render a boundary's mapping: grid CSV, disk-coloring PPM, image scatter PPM.
    Render(RenderArgs),
    /// Run the named-check verification suite; emits a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Weight exponent α > -1 (required for boundary inputs; spectrum inputs
    /// carry their own).
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Input JSON file: a boundary document or a spectrum document.
    #[arg(long)]
    input: PathBuf,
    /// Points "re,im", separated by ';' (repeatable).
    #[arg(long, required = true, allow_hyphen_values = true)]
    points: Vec<String>,
    /// Spectrum truncation used when derivatives are reconstructed from a
    /// boundary input.
    #[arg(long, default_value_t = 64)]
    k_trunc: u32,
    /// Relative tolerance for internal evaluators.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Weight exponent α > -1.
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Boundary JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Truncation K: coefficients are extracted for |k| ≤ K.
    #[arg(long, default_value_t = 64)]
    k_trunc: u32,
    /// Output JSON path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Weight exponent α > -1.
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Boundary JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Grid resolution (grid_n × grid_n), at least 16.
    #[arg(long, default_value_t = 128)]
    grid_n: usize,
    /// Series truncation for the grid evaluation.
    #[arg(long, default_value_t = 256)]
    k_trunc: u32,
    /// Relative tolerance for internal evaluators.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output prefix: writes <out>_grid.csv, <out>_disk.ppm, <out>_scatter.ppm.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Weight exponent α > -1 used by the α-parametric consistency checks.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Relative tolerance for internal evaluators; looser values widen the
    /// pass bands proportionally.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output JSON path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure modes mapped to exit codes: usage/malformed input → 2,
/// domain/convergence errors during computation → 3, failed checks → 1.
enum CliError {
    Usage(String),
    Domain(String),
    ChecksFailed(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            Self::ChecksFailed(_) => 1,
            Self::Usage(_) => 2,
            Self::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "{m}"),
            Self::Domain(m) => write!(f, "{m}"),
            Self::ChecksFailed(n) => write!(f, "{n} hard check(s) failed"),
        }
    }
}

/// Computation-stage errors are domain errors (exit 3).
fn compute_err(e: KitError) -> CliError {
    CliError::Domain(e.to_string())
}

/// Input-stage errors are usage errors (exit 2).
fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    configure_threads();
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

/// ALPHAKIT_THREADS caps the rayon pool used by grid evaluation.
fn configure_threads() {
    if let Ok(v) = std::env::var("ALPHAKIT_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Coeffs(args) => cmd_coeffs(args),
        Command::Render(args) => cmd_render(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_alpha(a: f64) -> Result<Alpha64, CliError> {
    Alpha64::new(a).map_err(input_err)
}

fn parse_policy(tol: f64) -> Result<Policy64, CliError> {
    Policy64::new(tol, 10_000, 64).map_err(input_err)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| input_err(format!("malformed JSON in {}: {e}", path.display())))
}

fn parse_points(specs: &[String]) -> Result<Vec<C>, CliError> {
    let mut pts = Vec::new();
    for spec in specs {
        for chunk in spec.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (re, im) = chunk
                .split_once(',')
                .ok_or_else(|| input_err(format!("point {chunk:?} is not \"re,im\"")))?;
            let re: f64 = re.trim().parse().map_err(input_err)?;
            let im: f64 = im.trim().parse().map_err(input_err)?;
            pts.push(C::new(re, im));
        }
    }
    if pts.is_empty() {
        return Err(input_err("no points given"));
    }
    Ok(pts)
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| input_err(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), CliError> {
    let policy = parse_policy(args.tol)?;
    let doc: InputDocument = read_json(&args.input)?;
    let points = parse_points(&args.points)?;

    let mut rows = Vec::with_capacity(points.len());
    match doc {
        InputDocument::Spectrum(schema) => {
            let s: Spectrum64 = schema.to_spectrum().map_err(input_err)?;
            for p in points {
                let z = Point64::new(p).map_err(compute_err)?;
                let ev = eval_series(&s, z, &policy).map_err(compute_err)?;
                rows.push((p, ev));
            }
        }
        InputDocument::Boundary(schema) => {
            let alpha = parse_alpha(
                args.alpha
                    .ok_or_else(|| input_err("boundary input needs --alpha"))?,
            )?;
            let b: Boundary64 = schema.to_boundary().map_err(input_err)?;
            let s = spectrum_from_boundary(alpha, &b, args.k_trunc).map_err(compute_err)?;
            for p in points {
                let z = Point64::new(p).map_err(compute_err)?;
                // value from the quadrature solver, derivatives from the
                // truncated spectrum series
                let u = solve_dirichlet(alpha, &b, z, &policy).map_err(compute_err)?;
                let mut ev = eval_series(&s, z, &policy).map_err(compute_err)?;
                ev.u = u;
                rows.push((p, ev));
            }
        }
    }
    write_or_print(&args.out, &output::eval_csv(&rows))
}

fn cmd_coeffs(args: CoeffsArgs) -> Result<(), CliError> {
    let alpha = parse_alpha(args.alpha)?;
    let schema: BoundarySchema = read_json(&args.input)?;
    let b = schema.to_boundary().map_err(input_err)?;
    let s = spectrum_from_boundary(alpha, &b, args.k_trunc).map_err(compute_err)?;
    let json = serde_json::to_string_pretty(&SpectrumSchema::from_spectrum(&s))
        .expect("spectrum serializes");
    write_or_print(&args.out, &(json + "\n"))
}

/// Radius cap of the rendered grid. The series evaluator stays accurate this
/// close to the boundary with the default truncation, and the sharp-case
/// image needs points near the rim to reach its corners.
const RENDER_RADIUS_CAP: f64 = 0.99;

fn cmd_render(args: RenderArgs) -> Result<(), CliError> {
    if args.grid_n < 16 {
        return Err(input_err("render needs --grid-n >= 16"));
    }
    let alpha = parse_alpha(args.alpha)?;
    let policy = parse_policy(args.tol)?;
    let schema: BoundarySchema = read_json(&args.input)?;
    let b = schema.to_boundary().map_err(input_err)?;
    let s = spectrum_from_boundary(alpha, &b, args.k_trunc).map_err(compute_err)?;

    let grid = output::render_grid(&s, args.grid_n, RENDER_RADIUS_CAP, &policy)
        .map_err(compute_err)?;

    let csv = output::grid_csv(args.grid_n, RENDER_RADIUS_CAP, &grid);
    let disk = output::disk_ppm(args.grid_n, &grid);
    let scatter = output::scatter_ppm(&grid);

    let base = args.out.as_os_str().to_string_lossy().into_owned();
    let write = |suffix: &str, bytes: &[u8]| -> Result<(), CliError> {
        let path = PathBuf::from(format!("{base}{suffix}"));
        std::fs::write(&path, bytes)
            .map_err(|e| input_err(format!("cannot write {}: {e}", path.display())))
    };
    write("_grid.csv", csv.as_bytes())?;
    write("_disk.ppm", &disk)?;
    write("_scatter.ppm", &scatter)?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let cfg = VerifyConfig { alpha: args.alpha, seed: args.seed, rel_tol: args.tol };
    cfg.validate().map_err(input_err)?;
    let report = run_suite(&cfg).map_err(compute_err)?;
    for check in &report.checks {
        let status = if check.passed {
            "PASS"
        } else if check.soft {
            "SOFT-FLAG"
        } else {
            "FAIL"
        };
        eprintln!(
            "{status} {name}: value={value:.6e} bound={bound:.6e} tol={tol:.1e}",
            name = check.name,
            value = check.value,
            bound = check.bound,
            tol = check.tol,
        );
    }
    write_or_print(&args.out, &(report.to_json() + "\n"))?;
    if report.all_passed {
        Ok(())
    } else {
        Err(CliError::ChecksFailed(report.hard_failures().count()))
    }
}

pub(crate) type Eval64 = MapEvaluation<f64>;
