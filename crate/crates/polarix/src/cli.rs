//! Command-line surface: tables, sweep curves and verification reports for
//! scripts and plotting tools.
//!
//! Subcommands: `alpha`, `gauge-check`, `friction bb`, `friction qf`,
//! `spectrum export`. Output defaults to CSV with `#`-prefixed provenance
//! comments (command line, grid parameters, constants version);
//! `--format json` switches to a single JSON document. All numbers are
//! printed with 17 significant digits. Exit codes: 0 ok, 1 verification
//! failure, 2 usage, 3 numerical.

use crate::friction::{self, DrudeModel, FrictionReport, ThermalConfig};
use crate::grid::{build_grid, GridSystem};
use crate::output::fmt_f64;
use crate::polarizability::{im_alpha_total, AlphaSource, PolarizabilityResult};
use crate::spectrum::{hydrogen_bound_lines, load_spectrum, write_spectrum, SpectrumModel};
use crate::units;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Default gauge-check frequency lattice, Hartree (all below the first
/// resonance).
pub const DEFAULT_GAUGE_LATTICE: [f64; 5] = [0.01, 0.05, 0.1, 0.2, 0.3];

#[derive(Parser)]
#[command(name = "polarix", version, about = "Dynamic dipole polarizability toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit re/im polarizability over a frequency or sweep
    Alpha(AlphaArgs),
    /// Verify the velocity/length gauge identity on the grid
    GaugeCheck(GaugeArgs),
    /// Friction coefficients consuming Im alpha
    #[command(subcommand)]
    Friction(FrictionCommand),
    /// Spectrum file utilities
    #[command(subcommand)]
    Spectrum(SpectrumCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepScale {
    Linear,
    Log,
}

#[derive(Args)]
struct GridArgs {
    /// Radial box size, Bohr radii
    #[arg(long, default_value_t = 200.0)]
    grid_rmax: f64,
    /// Number of radial grid points
    #[arg(long, default_value_t = 4000)]
    grid_n: usize,
}

#[derive(Args)]
struct SourceArgs {
    /// Use the built-in hydrogen radial grid
    #[arg(long)]
    hydrogen: bool,
    /// Load a polarix-spectrum v1 file instead
    #[arg(long, conflicts_with = "hydrogen")]
    spectrum: Option<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args)]
struct AlphaArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Single frequency, Hartree
    #[arg(long)]
    omega: Option<f64>,
    /// Sweep start, Hartree
    #[arg(long)]
    omega_min: Option<f64>,
    /// Sweep end, Hartree
    #[arg(long)]
    omega_max: Option<f64>,
    /// Sweep points
    #[arg(long, default_value_t = 101)]
    n_points: usize,
    #[arg(long, value_enum, default_value_t = SweepScale::Linear)]
    scale: SweepScale,
    /// Lorentzian broadening for the resonant part, Hartree
    #[arg(long, default_value_t = 0.0)]
    broadening_hartree: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct GaugeArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Frequency to check, Hartree (repeatable; default lattice otherwise)
    #[arg(long = "omega")]
    omegas: Vec<f64>,
    /// Residual tolerance gating the exit code
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum FrictionCommand {
    /// Blackbody friction coefficient
    Bb(FrictionBbArgs),
    /// Non-contact quantum friction above a Drude surface
    Qf(FrictionQfArgs),
}

#[derive(Args)]
struct FrictionBbArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Temperature, kelvin
    #[arg(long)]
    temp_k: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct FrictionQfArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Temperature, kelvin
    #[arg(long)]
    temp_k: f64,
    /// Atom-surface distance, meters
    #[arg(long)]
    distance_m: f64,
    /// Drude plasma frequency, Hartree
    #[arg(long)]
    omega_p: f64,
    /// Drude damping rate, Hartree
    #[arg(long)]
    gamma_drude: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum SpectrumCommand {
    /// Write a spectrum file (hydrogen analytic lines or a grid pseudospectrum)
    Export(SpectrumExportArgs),
}

#[derive(Args)]
struct SpectrumExportArgs {
    /// Analytic hydrogen bound lines up to this principal quantum number
    #[arg(long, conflicts_with = "grid_pseudospectrum")]
    hydrogen_nmax: Option<u32>,
    /// Export the pseudospectrum of the radial grid
    #[arg(long)]
    grid_pseudospectrum: bool,
    #[command(flatten)]
    grid: GridArgs,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Source {
    Grid(Box<GridSystem>),
    Lines(SpectrumModel),
}

impl Source {
    fn as_alpha(&self) -> &dyn AlphaSource {
        match self {
            Source::Grid(g) => g.as_ref(),
            Source::Lines(m) => m,
        }
    }

    fn grid_comment(&self) -> Option<String> {
        match self {
            Source::Grid(g) => Some(format!(
                "# grid: r_max={} n={}",
                fmt_f64(g.r_max()),
                g.n_points()
            )),
            Source::Lines(_) => None,
        }
    }
}

fn numerical_failure(msg: impl std::fmt::Display) -> i32 {
    eprintln!("polarix: numerical failure: {msg}");
    EXIT_NUMERICAL
}

fn usage_failure(msg: impl std::fmt::Display) -> i32 {
    eprintln!("polarix: usage error: {msg}");
    EXIT_USAGE
}

fn resolve_source(args: &SourceArgs) -> Result<Source, i32> {
    if let Some(path) = &args.spectrum {
        let model = load_spectrum(path).map_err(usage_failure)?;
        return Ok(Source::Lines(model));
    }
    if args.hydrogen {
        let sys = build_grid(args.grid.grid_rmax, args.grid.grid_n).map_err(usage_failure)?;
        return Ok(Source::Grid(Box::new(sys)));
    }
    Err(usage_failure("choose a source: --hydrogen or --spectrum FILE"))
}

fn sweep_frequencies(args: &AlphaArgs) -> Result<Vec<f64>, i32> {
    if let Some(w) = args.omega {
        return Ok(vec![w]);
    }
    let (min, max) = match (args.omega_min, args.omega_max) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(usage_failure(
                "give --omega or both --omega-min and --omega-max",
            ))
        }
    };
    if min.is_nan() || max.is_nan() || min >= max {
        return Err(usage_failure("omega-min must be below omega-max"));
    }
    if args.n_points < 2 {
        return Err(usage_failure("a sweep needs at least 2 points"));
    }
    let n = args.n_points;
    let pts = match args.scale {
        SweepScale::Linear => (0..n)
            .map(|i| min + (max - min) * i as f64 / (n - 1) as f64)
            .collect(),
        SweepScale::Log => {
            if min <= 0.0 {
                return Err(usage_failure("log sweeps need omega-min > 0"));
            }
            let (la, lb) = (min.ln(), max.ln());
            (0..n)
                .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
                .collect()
        }
    };
    Ok(pts)
}

fn command_comment() -> String {
    let argv: Vec<String> = std::env::args().collect();
    format!("# {}", argv.join(" "))
}

fn provenance_comments(grid_comment: Option<String>) -> Vec<String> {
    let mut out = vec![
        command_comment(),
        format!("# constants: {}", units::CONSTANTS_VERSION),
    ];
    if let Some(g) = grid_comment {
        out.push(g);
    }
    out
}

#[derive(serde::Serialize)]
struct AlphaRow {
    omega_hartree: f64,
    re_alpha_au: f64,
    im_oneloop_au: f64,
    im_broadened_au: f64,
}

impl From<PolarizabilityResult> for AlphaRow {
    fn from(r: PolarizabilityResult) -> Self {
        Self {
            omega_hartree: r.omega,
            re_alpha_au: r.re_alpha,
            im_oneloop_au: r.im_alpha_oneloop,
            im_broadened_au: r.im_alpha_resonant_broadened,
        }
    }
}

fn cmd_alpha(args: &AlphaArgs) -> i32 {
    let source = match resolve_source(&args.source) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let omegas = match sweep_frequencies(args) {
        Ok(w) => w,
        Err(code) => return code,
    };
    let mut rows = Vec::with_capacity(omegas.len());
    for &w in &omegas {
        match im_alpha_total(source.as_alpha(), w, args.broadening_hartree) {
            Ok(r) => rows.push(AlphaRow::from(r)),
            Err(e) => return numerical_failure(e),
        }
    }
    match args.format {
        OutputFormat::Csv => {
            for line in provenance_comments(source.grid_comment()) {
                println!("{line}");
            }
            println!("omega_hartree,re_alpha_au,im_oneloop_au,im_broadened_au");
            for r in &rows {
                println!(
                    "{},{},{},{}",
                    fmt_f64(r.omega_hartree),
                    fmt_f64(r.re_alpha_au),
                    fmt_f64(r.im_oneloop_au),
                    fmt_f64(r.im_broadened_au)
                );
            }
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "command": std::env::args().collect::<Vec<_>>().join(" "),
                "constants_version": units::CONSTANTS_VERSION,
                "rows": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    EXIT_OK
}

#[derive(serde::Serialize)]
struct GaugeRow {
    omega_hartree: f64,
    lhs: f64,
    rhs: f64,
    residual: f64,
    grid_defect: f64,
    seagull_sum: f64,
    dipole_sum: f64,
    total_velocity: f64,
    total_length: f64,
}

fn cmd_gauge_check(args: &GaugeArgs) -> i32 {
    let sys = match build_grid(args.grid.grid_rmax, args.grid.grid_n) {
        Ok(s) => s,
        Err(e) => return usage_failure(e),
    };
    let omegas: Vec<f64> = if args.omegas.is_empty() {
        DEFAULT_GAUGE_LATTICE.to_vec()
    } else {
        args.omegas.clone()
    };
    let mut rows = Vec::new();
    for &w in &omegas {
        match sys.gauge_identity_check(w) {
            Ok(r) => rows.push(GaugeRow {
                omega_hartree: r.omega,
                lhs: r.lhs,
                rhs: r.rhs,
                residual: r.residual,
                grid_defect: r.grid_defect,
                seagull_sum: r.seagull_sum,
                dipole_sum: r.dipole_sum,
                total_velocity: r.total_velocity,
                total_length: r.total_length,
            }),
            Err(e) => return numerical_failure(e),
        }
    }
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    match args.format {
        OutputFormat::Csv => {
            for line in provenance_comments(Some(format!(
                "# grid: r_max={} n={}",
                fmt_f64(sys.r_max()),
                sys.n_points()
            ))) {
                println!("{line}");
            }
            println!(
                "omega_hartree,lhs,rhs,residual,grid_defect,seagull_sum,dipole_sum,total_velocity,total_length"
            );
            for r in &rows {
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    fmt_f64(r.omega_hartree),
                    fmt_f64(r.lhs),
                    fmt_f64(r.rhs),
                    fmt_f64(r.residual),
                    fmt_f64(r.grid_defect),
                    fmt_f64(r.seagull_sum),
                    fmt_f64(r.dipole_sum),
                    fmt_f64(r.total_velocity),
                    fmt_f64(r.total_length)
                );
            }
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "command": std::env::args().collect::<Vec<_>>().join(" "),
                "constants_version": units::CONSTANTS_VERSION,
                "tol": args.tol,
                "max_residual": worst,
                "rows": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    if worst > args.tol {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

#[derive(serde::Serialize)]
struct FrictionDoc {
    command: String,
    constants_version: &'static str,
    kind: &'static str,
    units: &'static str,
    eta_kg_per_s: f64,
    eta_smooth_kg_per_s: f64,
    eta_resonant_kg_per_s: f64,
    quadrature_error_estimate_relative: f64,
    n_evaluations: usize,
}

fn emit_friction(kind: &'static str, report: &FrictionReport, format: OutputFormat) {
    let doc = FrictionDoc {
        command: std::env::args().collect::<Vec<_>>().join(" "),
        constants_version: units::CONSTANTS_VERSION,
        kind,
        units: "SI kg/s",
        eta_kg_per_s: report.eta,
        eta_smooth_kg_per_s: report.eta_smooth,
        eta_resonant_kg_per_s: report.eta_resonant,
        quadrature_error_estimate_relative: report.quadrature_error_estimate,
        n_evaluations: report.n_evaluations,
    };
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        OutputFormat::Csv => {
            println!("{}", command_comment());
            println!("# constants: {}", units::CONSTANTS_VERSION);
            println!("# units: SI kg/s");
            println!(
                "kind,eta_kg_per_s,eta_smooth_kg_per_s,eta_resonant_kg_per_s,quadrature_error_estimate_relative,n_evaluations"
            );
            println!(
                "{kind},{},{},{},{},{}",
                fmt_f64(doc.eta_kg_per_s),
                fmt_f64(doc.eta_smooth_kg_per_s),
                fmt_f64(doc.eta_resonant_kg_per_s),
                fmt_f64(doc.quadrature_error_estimate_relative),
                doc.n_evaluations
            );
        }
    }
}

fn cmd_friction_bb(args: &FrictionBbArgs) -> i32 {
    let source = match resolve_source(&args.source) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let thermal = match ThermalConfig::new(args.temp_k) {
        Ok(t) => t,
        Err(e) => return usage_failure(e),
    };
    match friction::eta_bb(source.as_alpha(), &thermal) {
        Ok(report) => {
            emit_friction("bb", &report, args.format);
            EXIT_OK
        }
        Err(e) => numerical_failure(e),
    }
}

fn cmd_friction_qf(args: &FrictionQfArgs) -> i32 {
    let source = match resolve_source(&args.source) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let thermal = match ThermalConfig::new(args.temp_k) {
        Ok(t) => t,
        Err(e) => return usage_failure(e),
    };
    let drude = match DrudeModel::new(args.omega_p, args.gamma_drude) {
        Ok(d) => d,
        Err(e) => return usage_failure(e),
    };
    match friction::eta_qf(source.as_alpha(), &thermal, args.distance_m, &drude) {
        Ok(report) => {
            emit_friction("qf", &report, args.format);
            EXIT_OK
        }
        Err(friction::FrictionError::InvalidArgument(msg)) => usage_failure(msg),
        Err(e) => numerical_failure(e),
    }
}

fn cmd_spectrum_export(args: &SpectrumExportArgs) -> i32 {
    let model = if args.grid_pseudospectrum {
        let sys = match build_grid(args.grid.grid_rmax, args.grid.grid_n) {
            Ok(s) => s,
            Err(e) => return usage_failure(e),
        };
        match sys.pseudospectrum() {
            Ok(m) => m.clone(),
            Err(e) => return numerical_failure(e),
        }
    } else {
        let n_max = args.hydrogen_nmax.unwrap_or(20);
        match hydrogen_bound_lines(n_max) {
            Ok(m) => m,
            Err(e) => return usage_failure(e),
        }
    };
    match &args.output {
        Some(path) => {
            let file = match std::fs::File::create(path) {
                Ok(f) => f,
                Err(e) => return usage_failure(e),
            };
            if let Err(e) = write_spectrum(&model, std::io::BufWriter::new(file)) {
                return usage_failure(e);
            }
        }
        None => {
            let mut out = Vec::new();
            write_spectrum(&model, &mut out).expect("in-memory write");
            print!("{}", String::from_utf8(out).expect("utf8"));
        }
    }
    EXIT_OK
}

/// Parse argv and dispatch; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version print to stdout and exit 0; parse errors are usage
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match &cli.command {
        Command::Alpha(args) => cmd_alpha(args),
        Command::GaugeCheck(args) => cmd_gauge_check(args),
        Command::Friction(FrictionCommand::Bb(args)) => cmd_friction_bb(args),
        Command::Friction(FrictionCommand::Qf(args)) => cmd_friction_qf(args),
        Command::Spectrum(SpectrumCommand::Export(args)) => cmd_spectrum_export(args),
    }
}
