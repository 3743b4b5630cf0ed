//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 failed check or numerical failure, 2 configuration or
//! argument error, 3 violated `K_n = o(n)` hypothesis, 4 I/O error.

mod manifest;

pub use manifest::{config_hash, RunManifest};

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::error::Error;
use crate::experiments::output::{write_fits, write_series, FitRow};
use crate::experiments::{
    self, fit_all, random_hermitian, resonance_demo, ExperimentConfig, Parity, Protocol,
};
use crate::matcore::ComplexMatrix;
use crate::qubit::qubit_diff;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SCHEDULE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Schedule(String),
    #[error("I/O error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Numerical(Error),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => EXIT_CONFIG,
            Self::Schedule(_) => EXIT_SCHEDULE,
            Self::Io { .. } => EXIT_IO,
            Self::Numerical(_) | Self::CheckFailed(_) => EXIT_FAILED,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ScheduleViolation { .. } => Self::Schedule(e.to_string()),
            Error::InvalidArgument(msg) => Self::Config(msg),
            other => Self::Numerical(other),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Parser)]
#[command(name = "zeno-trotter", version, about = "Convergence experiments for generalized product formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep the intermediate Zeno error over n and fit its decay rate.
    ZenoSweep(SweepArgs),
    /// Sweep the generalized Trotter error over n and fit its decay rate.
    TrotterSweep(SweepArgs),
    /// Fitted Trotter exponent beta for every alpha and seed.
    BetaCurve(SweepArgs),
    /// Closed-form qubit asymptotics.
    QubitCheck(QubitArgs),
    /// Even/odd split of the K_n = n^2 resonance counterexample.
    ResonanceDemo(ResonanceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// JSON configuration; keys override the preset.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory (created if missing).
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// paper-fig4, paper-fig5 or paper-fig6.
    #[arg(long)]
    pub preset: Option<String>,
    /// Use seeds 0..N.
    #[arg(long)]
    pub seeds: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct QubitArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub n_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ResonanceArgs {
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub n_max: u64,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    /// Use the diagonal part of the random H, which commutes with the control.
    #[arg(long)]
    pub commuting: bool,
}

/// Parses arguments and runs the command, writing tables to `out` and diagnostics to stderr.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::ZenoSweep(a) => cmd_zeno_sweep(a).map(|_| ()),
        Command::TrotterSweep(a) => cmd_trotter_sweep(a).map(|_| ()),
        Command::BetaCurve(a) => cmd_beta_curve(a).map(|_| ()),
        Command::QubitCheck(a) => cmd_qubit_check(a, out),
        Command::ResonanceDemo(a) => cmd_resonance_demo(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn default_preset(command: &str) -> &'static str {
    match command {
        "zeno-sweep" => "paper-fig4",
        "trotter-sweep" => "paper-fig5",
        _ => "paper-fig6",
    }
}

/// Preset (explicit or the command's default), overlaid with the config file's keys,
/// then with flags.
pub fn resolve_config(command: &str, args: &SweepArgs) -> Result<ExperimentConfig, CliError> {
    let base = ExperimentConfig::preset(args.preset.as_deref().unwrap_or(default_preset(command)))?;
    let mut config = match &args.config {
        None => base,
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            let overlay: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            let serde_json::Value::Object(fields) = overlay else {
                return Err(CliError::Config(format!(
                    "{}: expected a JSON object",
                    path.display()
                )));
            };
            let mut merged = serde_json::to_value(&base).expect("config serializes");
            let target = merged.as_object_mut().expect("config is an object");
            for (k, v) in fields {
                target.insert(k, v);
            }
            serde_json::from_value(merged)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        }
    };
    if let Some(n) = args.seeds {
        config.seeds = (0..n).collect();
    }
    config.validate()?;
    Ok(config)
}

fn with_threads<T: Send>(
    threads: Option<usize>,
    job: impl FnOnce() -> Result<T, CliError> + Send,
) -> Result<T, CliError> {
    match threads {
        None => job(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?
            .install(job),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(io_err(path))
}

fn to_io(path: &Path, e: Error) -> CliError {
    CliError::Io {
        path: path.to_path_buf(),
        source: io::Error::other(e.to_string()),
    }
}

fn write_manifest(out_dir: &Path, prefix: &str, manifest: &RunManifest) -> Result<PathBuf, CliError> {
    let path = out_dir.join(format!("{prefix}_manifest.json"));
    let mut w = create(&path)?;
    serde_json::to_writer_pretty(&mut w, manifest)
        .map_err(|e| CliError::Io { path: path.clone(), source: e.into() })?;
    writeln!(w).and_then(|_| w.flush()).map_err(io_err(&path))?;
    Ok(path)
}

fn run_sweep(command: &str, protocol: Protocol, args: &SweepArgs) -> Result<RunManifest, CliError> {
    let config = resolve_config(command, args)?;
    let series = with_threads(args.threads, || Ok(experiments::sweep(&config, protocol)?))?;
    let fits = fit_all(&series, config.fit_window)?;
    for row in &fits {
        match row.beta() {
            Some(b) => eprintln!("{protocol} alpha={} seed={} beta={b:.4}", row.alpha, row.seed),
            None => eprintln!("{protocol} alpha={} seed={} degenerate", row.alpha, row.seed),
        }
    }
    let rows: Vec<FitRow> = fits
        .iter()
        .map(|r| FitRow::from_beta(protocol, r, config.fit_window))
        .collect();
    let prefix = protocol.as_str();
    write_outputs(command, prefix, "series", "fits", &config, &series, &rows, &args.out)
}

#[allow(clippy::too_many_arguments)]
fn write_outputs(
    command: &str,
    prefix: &str,
    series_name: &str,
    fits_name: &str,
    config: &ExperimentConfig,
    series: &[experiments::ConvergenceSeries],
    rows: &[FitRow],
    out_dir: &Path,
) -> Result<RunManifest, CliError> {
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    let series_path = out_dir.join(format!("{prefix}_{series_name}.csv"));
    write_series(create(&series_path)?, series).map_err(|e| to_io(&series_path, e))?;
    let fits_path = out_dir.join(format!("{prefix}_{fits_name}.csv"));
    write_fits(create(&fits_path)?, rows).map_err(|e| to_io(&fits_path, e))?;
    let mut manifest = RunManifest::new(command, config, vec![series_path, fits_path]);
    let manifest_path = out_dir.join(format!("{prefix}_manifest.json"));
    manifest.output_paths.push(manifest_path);
    write_manifest(out_dir, prefix, &manifest)?;
    Ok(manifest)
}

pub fn cmd_zeno_sweep(args: &SweepArgs) -> Result<RunManifest, CliError> {
    run_sweep("zeno-sweep", Protocol::Zeno, args)
}

pub fn cmd_trotter_sweep(args: &SweepArgs) -> Result<RunManifest, CliError> {
    run_sweep("trotter-sweep", Protocol::Trotter, args)
}

pub fn cmd_beta_curve(args: &SweepArgs) -> Result<RunManifest, CliError> {
    let config = resolve_config("beta-curve", args)?;
    let (betas, series) = with_threads(args.threads, || Ok(experiments::beta_curve_with_series(&config)?))?;
    let rows: Vec<FitRow> = betas
        .iter()
        .map(|r| FitRow::from_beta(Protocol::Trotter, r, config.fit_window))
        .collect();
    for alpha in &config.alphas {
        let bs: Vec<f64> = betas.iter().filter(|r| r.alpha == *alpha).filter_map(|r| r.beta()).collect();
        if !bs.is_empty() {
            eprintln!("alpha={alpha} mean beta={:.4}", bs.iter().sum::<f64>() / bs.len() as f64);
        }
    }
    write_outputs("beta-curve", "beta", "series", "curve", &config, &series, &rows, &args.out)
}

/// Powers of ten up to `n_max`, plus `n_max` itself.
fn qubit_grid(n_max: u64) -> Vec<u64> {
    let mut grid: Vec<u64> = (1..20)
        .map(|k| 10u64.pow(k))
        .take_while(|&n| n <= n_max)
        .collect();
    if grid.last() != Some(&n_max) {
        grid.push(n_max);
    }
    grid
}

/// Outcome of one named asymptotic check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Relative tolerance of the asymptotic ratio checks at the largest `n`.
pub const QUBIT_RATIO_TOL: f64 = 0.05;

/// Asymptotic checks of the qubit closed forms on the grid of powers of ten up to `n_max`.
///
/// The leading terms carry the finite-coupling factor `K_n / phi_n` (1 when alpha > 0 in
/// the limit, `1/sqrt 2` at alpha = 0): the phase gap scaled by `n^2 / K_n` tends to
/// `K_n / (6 phi_n)` and `n (u_n - v_n)_y` to `K_n / phi_n`.
pub fn qubit_checks(alpha: f64, n_max: u64) -> crate::Result<(Vec<crate::qubit::QubitDiff>, Vec<CheckResult>)> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let grid = qubit_grid(n_max);
    let diffs = grid
        .iter()
        .map(|&n| qubit_diff(n, alpha))
        .collect::<crate::Result<Vec<_>>>()?;
    let phase_ratio = |d: &crate::qubit::QubitDiff| d.scaled_phase_gap() / (d.coupling_factor() / 6.0);
    let axis_ratio = |d: &crate::qubit::QubitDiff| d.scaled_axis_gap()[1] / d.coupling_factor();
    let last = diffs.last().expect("non-empty grid");
    let asymptotic: Vec<&crate::qubit::QubitDiff> = diffs.iter().filter(|d| d.step.n >= 1000).collect();
    let monotone = |f: &dyn Fn(&crate::qubit::QubitDiff) -> f64| {
        asymptotic
            .windows(2)
            .all(|w| (f(w[1]) - 1.0).abs() <= (f(w[0]) - 1.0).abs().max(0.01))
    };

    let worst_scaled = diffs
        .iter()
        .map(|d| d.step.n as f64 * d.norm)
        .fold(0.0, f64::max);
    let pr = phase_ratio(last);
    let ar = axis_ratio(last);
    let residual = last.finite_coupling_residual();
    let first_gap = diffs[0].step.n as f64 * diffs[0].phase_gap.abs();
    let last_gap = last.step.n as f64 * last.phase_gap.abs();
    let checks = vec![
        CheckResult {
            name: "n*||U_n - V_n|| bounded by 4",
            passed: worst_scaled <= 4.0,
            detail: format!("max {worst_scaled:.4}"),
        },
        CheckResult {
            name: "phase gap ~ K_n^2/(6 n^2 phi_n)",
            passed: (pr - 1.0).abs() <= QUBIT_RATIO_TOL && monotone(&phase_ratio),
            detail: format!("ratio {pr:.6} at n = {}", last.step.n),
        },
        CheckResult {
            name: "axis gap n*(u_n - v_n)_y ~ K_n/phi_n",
            passed: (ar - 1.0).abs() <= QUBIT_RATIO_TOL && monotone(&axis_ratio),
            detail: format!("ratio {ar:.6} at n = {}", last.step.n),
        },
        CheckResult {
            name: "n*(U_n - V_n) + i (K_n/phi_n) sin(phi_n) Y -> 0",
            passed: residual <= 0.1,
            detail: format!("residual {residual:.3e} at n = {}", last.step.n),
        },
        CheckResult {
            name: "phase gap is o(1/n)",
            passed: diffs.len() < 2 || last_gap < first_gap,
            detail: format!("n*|gap| {first_gap:.3e} -> {last_gap:.3e}"),
        },
    ];
    Ok((diffs, checks))
}

pub fn cmd_qubit_check<W: Write>(args: &QubitArgs, out: &mut W) -> Result<(), CliError> {
    if !(0.0..1.0).contains(&args.alpha) {
        return Err(CliError::Config(format!("alpha must lie in [0, 1), got {}", args.alpha)));
    }
    let (diffs, checks) = qubit_checks(args.alpha, args.n_max)?;
    let stdout = Path::new("<stdout>");
    let mut emit = || -> io::Result<bool> {
        writeln!(out, "n,norm,n_norm,phase_gap,axis_gap_norm")?;
        for d in &diffs {
            let g = d.axis_gap;
            writeln!(
                out,
                "{},{:.6e},{:.6},{:.6e},{:.6e}",
                d.step.n,
                d.norm,
                d.step.n as f64 * d.norm,
                d.phase_gap,
                g[0].hypot(g[1]).hypot(g[2])
            )?;
        }
        let mut all = true;
        for c in &checks {
            all &= c.passed;
            writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(all)
    };
    let all = emit().map_err(io_err(stdout))?;
    if all {
        Ok(())
    } else {
        Err(CliError::CheckFailed("qubit asymptotic checks failed".into()))
    }
}

pub fn cmd_resonance_demo<W: Write>(args: &ResonanceArgs, out: &mut W) -> Result<(), CliError> {
    if args.n_max < 2 {
        return Err(CliError::Config("n_max must be at least 2".into()));
    }
    if args.dim < 2 {
        return Err(CliError::Config("dim must be at least 2".into()));
    }
    let mut h = random_hermitian(args.seed, args.dim);
    if args.commuting {
        let diag: Vec<f64> = (0..args.dim).map(|i| h[(i, i)].re).collect();
        h = ComplexMatrix::from_real_diagonal(&diag);
    }
    let n_list: Vec<u64> = (1..=args.n_max).collect();
    let rows = resonance_demo(&h, &n_list)?;
    let stdout = Path::new("<stdout>");
    let mut emit = || -> io::Result<()> {
        writeln!(out, "n,parity,deviation")?;
        for r in &rows {
            writeln!(out, "{},{},{:.6e}", r.n, r.parity.as_str(), r.deviation)?;
        }
        let max_even = rows
            .iter()
            .filter(|r| r.parity == Parity::Even)
            .map(|r| r.deviation)
            .fold(0.0, f64::max);
        let min_odd = rows
            .iter()
            .filter(|r| r.parity == Parity::Odd)
            .map(|r| r.deviation)
            .fold(f64::INFINITY, f64::min);
        writeln!(out, "# max even deviation {max_even:.3e}, min odd deviation {min_odd:.3e}")
    };
    emit().map_err(io_err(stdout))
}
