//! The `fab` command-line front end.
//!
//! Exit status: 0 on success, 1 on a usage or configuration error, 2 when a
//! run was truncated because its state stopped being finite. A truncated run
//! still writes its CSV and manifest.

mod config;
mod output;

pub use config::{FileConfig, RunConfig, DEFAULT_REFINE};
pub use output::{csv_bytes, format_float, trajectory_csv, write_csv, write_json, write_trajectory_csv, NumericTable};

use crate::analysis::{contraction_check, convergence_table, phi_grid, ConvergenceRow};
use crate::error::{Error, Result};
use crate::integrators::{integrate, Bootstrap, Method, Scheme, Trajectory, Truncation, WeightVariant};
use crate::math::Order;
use crate::systems::Hyper4dF3;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_TRUNCATED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fab", version, about = "Two-step fractional Adams-Bashforth solver for ABC initial-value problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integrate a system and write its trajectory as CSV.
    Simulate(SimulateArgs),
    /// Error table against the closed-form tbeta solution.
    Converge(ConvergeArgs),
    /// Grid of the truncation factor over n and alpha.
    Phi(PhiArgs),
    /// Uniqueness thresholds from the contraction argument, as JSON.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct SchemeArgs {
    #[arg(long, value_enum)]
    scheme: Option<Scheme>,
    #[arg(long, value_enum)]
    variant: Option<WeightVariant>,
    #[arg(long, value_enum)]
    bootstrap: Option<Bootstrap>,
    /// Sub-steps per grid step for the reference scheme.
    #[arg(long)]
    refine: Option<usize>,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// TOML file with any of the settings below; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    system: Option<String>,
    /// Parameter override, repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param)]
    params: Vec<(String, f64)>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Initial state, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ic: Option<Vec<f64>>,
    #[arg(long = "hyper4d-f3-variant", value_parser = parse_f3)]
    hyper4d_f3: Option<Hyper4dF3>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    #[arg(long, default_value = "tbeta")]
    system: String,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    alpha: f64,
    /// Strictly decreasing step sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    h: Vec<f64>,
    #[arg(long)]
    t_final: f64,
    #[command(flatten)]
    scheme: SchemeArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct PhiArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    alphas: Vec<f64>,
    #[arg(long)]
    h: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
#[allow(non_snake_case)]
struct CheckArgs {
    /// Lipschitz constant of f.
    #[arg(long = "L")]
    L: f64,
    /// Bound on |f| over the region.
    #[arg(long = "M")]
    M: f64,
    /// Radius of the region around the initial state.
    #[arg(long)]
    b: f64,
    #[arg(long)]
    alpha: f64,
    /// Interval length to test.
    #[arg(long)]
    c: Option<f64>,
}

fn parse_param(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("bad value for `{k}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_f3(s: &str) -> std::result::Result<Hyper4dF3, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Diagnostics section of a simulation manifest.
#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub rows: usize,
    pub completed: bool,
    pub truncation: Option<Truncation>,
    pub max_stability: f64,
    pub final_stability: Option<f64>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest<'a> {
    pub config: &'a RunConfig,
    pub version: &'static str,
    pub diagnostics: Diagnostics,
}

/// Where the manifest for a CSV at `out` goes: `run.csv` → `run.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    out.with_extension("manifest.json")
}

/// Runs the simulation described by `cfg` without writing anything.
pub fn simulate(cfg: &RunConfig) -> Result<Trajectory> {
    let sys = cfg.system_spec()?;
    let ic = cfg.initial_state(&sys)?;
    integrate(cfg.method(), &sys, &ic, cfg.grid()?, cfg.order()?)
}

/// Runs `cfg`, writes the CSV and manifest, and returns the trajectory.
pub fn simulate_to_files(cfg: &RunConfig) -> Result<Trajectory> {
    let tr = simulate(cfg)?;
    write_trajectory_csv(&cfg.out, &tr)?;
    let diagnostics = Diagnostics {
        rows: tr.len(),
        completed: tr.is_complete(),
        truncation: tr.meta.truncation.clone(),
        max_stability: tr.max_stability(),
        final_stability: tr.stability.last().copied(),
        notes: tr.meta.notes.clone(),
    };
    write_json(&manifest_path(&cfg.out), &Manifest { config: cfg, version: env!("CARGO_PKG_VERSION"), diagnostics })?;
    Ok(tr)
}

/// Writes a convergence table as `h,max_abs_error,observed_order,valid`.
pub fn write_convergence_csv(path: &Path, rows: &[ConvergenceRow]) -> Result<()> {
    let body = rows.iter().map(|r| {
        vec![format_float(r.h), format_float(r.max_abs_error), r.observed_order.map(format_float).unwrap_or_default(), r.valid.to_string()]
    });
    write_csv(path, &["h", "max_abs_error", "observed_order", "valid"], body)
}

/// Parses `args` (program name first) and runs the command. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// Writes a line to stdout. A closed pipe (`fab check | head`) is not an error.
fn say(line: std::fmt::Arguments) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Simulate(a) => cmd_simulate(a),
        Command::Converge(a) => cmd_converge(a),
        Command::Phi(a) => cmd_phi(a),
        Command::Check(a) => cmd_check(a),
    }
}

fn cmd_simulate(a: SimulateArgs) -> Result<i32> {
    let file = match &a.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let flags = FileConfig {
        system: a.system,
        params: a.params.into_iter().collect(),
        alpha: a.alpha,
        h: a.h,
        t_final: a.t_final,
        scheme: a.scheme.scheme,
        variant: a.scheme.variant,
        bootstrap: a.scheme.bootstrap,
        refine: a.scheme.refine,
        hyper4d_f3: a.hyper4d_f3,
        ic: a.ic,
        out: a.out,
    };
    let cfg = RunConfig::resolve(file.overlay(flags))?;
    let tr = simulate_to_files(&cfg)?;
    match &tr.meta.truncation {
        None => {
            say(format_args!("wrote {} rows to {}", tr.len(), cfg.out.display()));
            Ok(EXIT_OK)
        }
        Some(t) => {
            eprintln!("run truncated at step {} (t = {}): {}; wrote {} rows to {}", t.step, t.time, t.reason, tr.len(), cfg.out.display());
            Ok(EXIT_TRUNCATED)
        }
    }
}

fn cmd_converge(a: ConvergeArgs) -> Result<i32> {
    if a.system != "tbeta" {
        return Err(Error::Config(format!("convergence studies need a closed-form solution; only `tbeta` has one, got `{}`", a.system)));
    }
    let order = Order::new(a.alpha)?;
    let method = match a.scheme.scheme.unwrap_or_default() {
        Scheme::TwoStep => {
            Method::TwoStep { variant: a.scheme.variant.unwrap_or_default(), bootstrap: a.scheme.bootstrap.unwrap_or_default() }
        }
        Scheme::FullHistory => Method::FullHistory { bootstrap: a.scheme.bootstrap.unwrap_or_default() },
        Scheme::Reference => Method::Reference { refine: a.scheme.refine.unwrap_or(DEFAULT_REFINE) },
    };
    let rows = convergence_table(order, a.beta, &a.h, a.t_final, method)?;
    write_convergence_csv(&a.out, &rows)?;
    say(format_args!("wrote {} rows to {}", rows.len(), a.out.display()));
    Ok(if rows.iter().all(|r| r.valid) { EXIT_OK } else { EXIT_TRUNCATED })
}

fn cmd_phi(a: PhiArgs) -> Result<i32> {
    let rows = phi_grid(a.n_max, &a.alphas, a.h)?;
    let body = rows.iter().map(|r| vec![r.n.to_string(), format_float(r.alpha), format_float(r.phi), format_float(r.bound)]);
    write_csv(&a.out, &["n", "alpha", "phi", "bound"], body)?;
    say(format_args!("wrote {} rows to {}", rows.len(), a.out.display()));
    Ok(EXIT_OK)
}

fn cmd_check(a: CheckArgs) -> Result<i32> {
    let report = contraction_check(a.L, a.M, a.b, Order::new(a.alpha)?, a.c)?;
    say(format_args!("{}", serde_json::to_string_pretty(&report)?));
    Ok(EXIT_OK)
}
