//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or domain error,
//! 3 I/O error.

pub mod record;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, BoundParams};
use crate::geometry::LayerConfig;
use crate::montecarlo::{self, Experiment, RunOptions};
use crate::validate::{self, Level};
use crate::Error;
pub use record::{csv_float, num, RunRecord};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Environment variable overriding the default trial budget of `estimate`.
pub const TRIALS_ENV: &str = "LAYERCONVEX_TRIALS";

pub const DEFAULT_TRIALS: u64 = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

pub const ESTIMATE_HEADER: [&str; 11] = [
    "d",
    "r",
    "n",
    "trials",
    "seed",
    "tol",
    "successes",
    "p_hat",
    "ci_low",
    "ci_high",
    "wall_time",
];

pub const BOUNDS_HEADER: [&str; 12] = [
    "d",
    "r",
    "alpha",
    "f",
    "log2_f",
    "g",
    "log2_g",
    "asymptotic_g",
    "ratio_f_over_g",
    "asymptotic_ratio",
    "log2_asymptotic_ratio",
    "regime",
];

pub const SWEEP_HEADER: [&str; 12] = [
    "d",
    "r",
    "alpha",
    "f",
    "g",
    "ratio_f_over_g",
    "asymptotic_ratio",
    "regime",
    "n",
    "p_hat",
    "ci_low",
    "ci_high",
];

#[derive(Debug, Parser)]
#[command(
    name = "layerconvex",
    version,
    about = "1-convexity of random points in a spherical layer"
)]
pub struct Cli {
    /// Worker threads for Monte Carlo runs (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedArg {
    Fixed(u64),
    Random,
}

impl SeedArg {
    fn resolve(self) -> u64 {
        match self {
            SeedArg::Fixed(s) => s,
            SeedArg::Random => rand::random(),
        }
    }
}

fn parse_seed(s: &str) -> Result<SeedArg, String> {
    if s == "random" {
        return Ok(SeedArg::Random);
    }
    s.parse()
        .map(SeedArg::Fixed)
        .map_err(|_| format!("expected an integer or 'random', got '{s}'"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte Carlo estimate of the probability that n layer points are 1-convex.
    Estimate(EstimateArgs),
    /// Closed-form bounds f and g, their ratio and asymptotic regime.
    Bounds(BoundsArgs),
    /// Bounds table over a range of dimensions, written as CSV.
    Sweep(SweepArgs),
    /// Run the property suites.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub r: f64,
    #[arg(long)]
    pub n: usize,
    /// Defaults to $LAYERCONVEX_TRIALS, else 10000.
    #[arg(long, env = TRIALS_ENV)]
    pub trials: Option<u64>,
    #[arg(long, value_parser = parse_seed, default_value_t = SeedArg::Fixed(DEFAULT_SEED), hide_default_value = true)]
    pub seed: SeedArg,
    #[arg(long, default_value_t = montecarlo::DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub r: f64,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Inclusive dimension range, e.g. `10..20`.
    #[arg(long = "d-range")]
    pub d_range: String,
    /// Comma-separated inner radii.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<f64>,
    #[arg(long)]
    pub alpha: f64,
    /// Trials per row for the empirical column; 0 skips simulation.
    #[arg(long, default_value_t = 0)]
    pub trials: u64,
    #[arg(long, value_parser = parse_seed, default_value_t = SeedArg::Fixed(DEFAULT_SEED), hide_default_value = true)]
    pub seed: SeedArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value = "quick")]
    pub level: String,
    #[arg(long, value_parser = parse_seed, default_value_t = SeedArg::Fixed(DEFAULT_SEED), hide_default_value = true)]
    pub seed: SeedArg,
}

impl std::fmt::Display for SeedArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeedArg::Fixed(s) => write!(f, "{s}"),
            SeedArg::Random => f.write_str("random"),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Validation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let opts = RunOptions {
        jobs: cli.jobs,
        ..Default::default()
    };
    let outcome = match cli.command {
        Command::Estimate(a) => cmd_estimate(&a, &opts, out),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, &opts, out),
        Command::Validate(a) => cmd_validate(&a, &opts, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Validation) => EXIT_VALIDATION,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn write_csv(out: &mut dyn Write, header: &[&str], row: &[String]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    w.write_record(row)?;
    w.flush()?;
    Ok(())
}

fn cmd_estimate(a: &EstimateArgs, opts: &RunOptions, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = LayerConfig::new(a.d, a.r)?;
    let trials = a.trials.unwrap_or(DEFAULT_TRIALS);
    let seed = a.seed.resolve();
    let exp = Experiment::new(cfg, a.n, trials, seed)?.with_tolerance(a.tol);
    let est = montecarlo::estimate_p_one_convex(&exp, opts)?;
    match a.format {
        Format::Json => {
            let lb = bounds::prob_lower_bound(a.n as u64, &cfg)?;
            let mut rec = RunRecord::new("estimate", Some(seed));
            rec.param("d", a.d)
                .param("r", num(a.r))
                .param("n", a.n)
                .param("trials", trials)
                .param("tol", num(a.tol));
            rec.result("successes", est.successes)
                .result("trials", est.trials)
                .result("p_hat", num(est.p_hat))
                .result("ci_low", num(est.ci_low))
                .result("ci_high", num(est.ci_high))
                .result("half_width", num(est.half_width()))
                .result("wall_time", num(est.wall_time))
                .result("prob_lower_bound_sharp", num(lb.sharp))
                .result("prob_lower_bound_vacuous", lb.vacuous);
            writeln!(out, "{}", rec.to_json())?;
        }
        Format::Csv => write_csv(
            out,
            &ESTIMATE_HEADER,
            &[
                a.d.to_string(),
                csv_float(a.r),
                a.n.to_string(),
                trials.to_string(),
                seed.to_string(),
                csv_float(a.tol),
                est.successes.to_string(),
                csv_float(est.p_hat),
                csv_float(est.ci_low),
                csv_float(est.ci_high),
                csv_float(est.wall_time),
            ],
        )?,
    }
    Ok(())
}

/// Every quantity reported by `bounds`, keyed as in the JSON record.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub params: BoundParams,
    pub f: f64,
    pub log2_f: f64,
    pub g: Option<f64>,
    pub log2_g: Option<f64>,
    pub asymptotic_g: Option<f64>,
    pub ratio_f_over_g: Option<f64>,
    pub log2_ratio_f_over_g: Option<f64>,
    pub asymptotic_ratio: Option<f64>,
    pub log2_asymptotic_ratio: Option<f64>,
    pub regime: Option<bounds::Regime>,
}

pub fn bounds_row(p: &BoundParams) -> crate::Result<BoundsRow> {
    let ln2 = std::f64::consts::LN_2;
    let mut row = BoundsRow {
        params: *p,
        f: bounds::bound_f(p),
        log2_f: bounds::log2_bound_f(p),
        g: None,
        log2_g: None,
        asymptotic_g: None,
        ratio_f_over_g: None,
        log2_ratio_f_over_g: None,
        asymptotic_ratio: None,
        log2_asymptotic_ratio: None,
        regime: None,
    };
    if p.r() > 0.0 {
        let ln_g = bounds::ln_bound_g(p)?;
        let ln_ratio = bounds::ln_ratio_f_over_g(p)?;
        let ln_asym_ratio = bounds::ln_asymptotic_ratio_f_over_g(p)?;
        row.g = Some(ln_g.exp());
        row.log2_g = Some(ln_g / ln2);
        row.asymptotic_g = Some(bounds::asymptotic_g(p)?);
        row.ratio_f_over_g = Some(ln_ratio.exp());
        row.log2_ratio_f_over_g = Some(ln_ratio / ln2);
        row.asymptotic_ratio = Some(ln_asym_ratio.exp());
        row.log2_asymptotic_ratio = Some(ln_asym_ratio / ln2);
        row.regime = Some(bounds::classify_regime(p.r())?.case);
    }
    Ok(row)
}

fn opt_num(x: Option<f64>) -> serde_json::Value {
    x.map_or(serde_json::Value::Null, num)
}

fn opt_csv(x: Option<f64>) -> String {
    x.map_or_else(String::new, csv_float)
}

fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let p = BoundParams::new(a.d, a.r, a.alpha)?;
    let row = bounds_row(&p)?;
    match a.format {
        Format::Json => {
            let mut rec = RunRecord::new("bounds", None);
            rec.param("d", a.d)
                .param("r", num(a.r))
                .param("alpha", num(a.alpha));
            rec.result("f", num(row.f))
                .result("log2_f", num(row.log2_f))
                .result("g", opt_num(row.g))
                .result("log2_g", opt_num(row.log2_g))
                .result("asymptotic_g", opt_num(row.asymptotic_g))
                .result("ratio_f_over_g", opt_num(row.ratio_f_over_g))
                .result("log2_ratio_f_over_g", opt_num(row.log2_ratio_f_over_g))
                .result("asymptotic_ratio_f_over_g", opt_num(row.asymptotic_ratio))
                .result(
                    "log2_asymptotic_ratio_f_over_g",
                    opt_num(row.log2_asymptotic_ratio),
                )
                .result("regime", row.regime.map(|r| r.label()))
                .result("r_star", num(bounds::CRITICAL_RADIUS));
            if row.g.is_none() {
                rec.result("g_note", "g is defined only for 0 < r < 1");
            }
            match bounds::admissible_n(&p) {
                Some(n) => {
                    let lb = bounds::prob_lower_bound(n, &p.layer())?;
                    rec.result("admissible_n", n)
                        .result("prob_lower_bound_sharp", num(lb.sharp))
                        .result("prob_lower_bound_simplified", num(lb.simplified));
                }
                None => {
                    rec.result("admissible_n", serde_json::Value::Null);
                }
            }
            writeln!(out, "{}", rec.to_json())?;
        }
        Format::Csv => write_csv(
            out,
            &BOUNDS_HEADER,
            &[
                a.d.to_string(),
                csv_float(a.r),
                csv_float(a.alpha),
                csv_float(row.f),
                csv_float(row.log2_f),
                opt_csv(row.g),
                opt_csv(row.log2_g),
                opt_csv(row.asymptotic_g),
                opt_csv(row.ratio_f_over_g),
                opt_csv(row.asymptotic_ratio),
                opt_csv(row.log2_asymptotic_ratio),
                row.regime
                    .map(|r| r.label().to_string())
                    .unwrap_or_default(),
            ],
        )?,
    }
    Ok(())
}

/// Parses an inclusive `a..b` range; `b < a` yields an empty range.
pub fn parse_d_range(s: &str) -> crate::Result<std::ops::RangeInclusive<usize>> {
    let bad = || Error::InvalidArgument(format!("expected a range like 10..20, got '{s}'"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn cmd_sweep(a: &SweepArgs, opts: &RunOptions, out: &mut dyn Write) -> Result<(), Failure> {
    let range = parse_d_range(&a.d_range)?;
    if range.is_empty() {
        return Err(Failure::Usage(format!(
            "empty dimension range '{}'",
            a.d_range
        )));
    }
    if a.r.is_empty() {
        return Err(Failure::Usage("empty radius list".into()));
    }
    let seed = a.seed.resolve();
    // validate everything before touching the file system
    let mut grid = Vec::new();
    for &r in &a.r {
        for d in range.clone() {
            grid.push(BoundParams::new(d, r, a.alpha)?);
        }
    }
    let mut rows = Vec::with_capacity(grid.len());
    for p in &grid {
        let row = bounds_row(p)?;
        let mut cells = vec![
            p.d().to_string(),
            csv_float(p.r()),
            csv_float(p.alpha()),
            csv_float(row.f),
            opt_csv(row.g),
            opt_csv(row.ratio_f_over_g),
            opt_csv(row.asymptotic_ratio),
            row.regime
                .map(|r| r.label().to_string())
                .unwrap_or_default(),
        ];
        let n = bounds::admissible_n(p);
        cells.push(n.map(|n| n.to_string()).unwrap_or_default());
        match n {
            Some(n) if a.trials > 0 => {
                let exp = Experiment::new(p.layer(), n as usize, a.trials, seed)?;
                let est = montecarlo::estimate_p_one_convex(&exp, opts)?;
                cells.extend([
                    csv_float(est.p_hat),
                    csv_float(est.ci_low),
                    csv_float(est.ci_high),
                ]);
            }
            _ => cells.extend([String::new(), String::new(), String::new()]),
        }
        rows.push(cells);
    }
    let mut w = csv::Writer::from_path(&a.out)?;
    w.write_record(SWEEP_HEADER)?;
    for row in &rows {
        w.write_record(row)?;
    }
    w.flush()?;

    let mut rec = RunRecord::new("sweep", Some(seed));
    rec.param("d_range", a.d_range.as_str())
        .param("r", a.r.iter().map(|&r| num(r)).collect::<Vec<_>>())
        .param("alpha", num(a.alpha))
        .param("trials", a.trials);
    rec.result("rows", rows.len())
        .result("out", a.out.display().to_string());
    writeln!(out, "{}", rec.to_json())?;
    Ok(())
}

fn cmd_validate(a: &ValidateArgs, opts: &RunOptions, out: &mut dyn Write) -> Result<(), Failure> {
    let level: Level = a.level.parse()?;
    let seed = a.seed.resolve();
    writeln!(out, "validate level={} seed={seed}", a.level)?;
    let results = validate::run_all(level, seed, opts);
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        writeln!(
            out,
            "{:<width$}  {}  {:>7.2}s  {}",
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.seconds,
            r.detail
        )?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} passed, {failed} failed", results.len() - failed)?;
    if failed > 0 {
        Err(Failure::Validation)
    } else {
        Ok(())
    }
}
