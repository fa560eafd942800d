//! Command-line front end: catalog listing, verification sweeps, rule checks,
//! gamma-path checks, and the evaluation-order benchmark.
//!
//! Exit codes: 0 all selected checks passed; 1 at least one verification
//! failure (reports are still written); 2 usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use harmonid::catalog::{self, Mode};
use harmonid::harness::{self, HarnessError, SweepConfig, VerificationReport};
use harmonid::report;

#[derive(Parser)]
#[command(
    name = "harmonid",
    version,
    about = "Exact verification of harmonic-number summation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the identity catalog (id, parameters, anchor, mode)
    List(ListArgs),
    /// Sweep identities over integer grids and seeded rational samples
    Verify(VerifyArgs),
    /// Check the derivative rules and the reversal symmetry
    Derivcheck(SweepArgs),
    /// Check the gamma-form identities: exact reductions and the float track
    Gammacheck(SweepArgs),
    /// Compare the two exact series evaluation orders
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Upper bound of the n (and k) grid
    #[arg(long, default_value_t = 20)]
    n_max: u64,
    /// Upper bound of the p grid
    #[arg(long, default_value_t = 6)]
    p_max: u64,
    /// Upper bound of the q grid
    #[arg(long, default_value_t = 6)]
    q_max: u64,
    /// Random rational tuples per grid point
    #[arg(long, default_value_t = 25)]
    samples: u32,
    /// Seed for randomized sampling (default: HARMONID_SEED or 42)
    #[arg(long)]
    seed: Option<u64>,
    /// Largest |numerator| of sampled rationals
    #[arg(long, default_value_t = 12)]
    num_bound: i64,
    /// Largest denominator of sampled rationals
    #[arg(long, default_value_t = 12)]
    den_bound: u64,
    /// Relative tolerance for float-mode comparisons
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Term cap for truncated series evaluation
    #[arg(long, default_value_t = 500_000)]
    max_terms: u64,
    /// Worker cap (0 = all cores, 1 = sequential)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every catalog entry
    #[arg(long)]
    all: bool,
    /// Verify one identity (repeatable)
    #[arg(long = "id")]
    ids: Vec<String>,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("HARMONID_SEED") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("HARMONID_SEED is not a valid seed: {raw:?}")),
        Err(_) => Ok(42),
    }
}

fn build_config(args: &SweepArgs) -> Result<SweepConfig, String> {
    Ok(SweepConfig {
        n_max: args.n_max,
        p_max: args.p_max,
        q_max: args.q_max,
        rational_samples: args.samples,
        seed: resolve_seed(args.seed)?,
        numerator_bound: args.num_bound,
        denominator_bound: args.den_bound,
        float_tol: args.tol,
        max_terms: args.max_terms,
        jobs: args.jobs,
    })
}

#[cfg(feature = "parallel")]
fn configure_workers(jobs: usize) {
    if jobs >= 2 {
        // ignore failure: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_workers(_jobs: usize) {}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => report::reports_to_json(reports),
        Format::Csv => report::reports_to_csv(reports),
        Format::Table => report::reports_to_table(reports),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn finish(reports: &[VerificationReport], format: Format, out: &Option<PathBuf>) -> ExitCode {
    let body = render(reports, format);
    if let Err(e) = emit(out, &body) {
        return usage_error(&e);
    }
    if harness::all_passed(reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    if !args.all && args.ids.is_empty() {
        return usage_error("verify needs --all or at least one --id");
    }
    let cfg = match build_config(&args.sweep) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    configure_workers(cfg.jobs);
    let filter = if args.all { None } else { Some(&args.ids[..]) };
    match harness::run_all(&cfg, filter) {
        Ok(reports) => finish(&reports, args.sweep.format, &args.sweep.out),
        Err(HarnessError::UnknownId(id)) => {
            usage_error(&format!("unknown identity id: {id} (see `harmonid list`)"))
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn run_derivcheck(args: SweepArgs) -> ExitCode {
    let cfg = match build_config(&args) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    configure_workers(cfg.jobs);
    let reports = harness::run_rule_checks(&cfg);
    finish(&reports, args.format, &args.out)
}

fn run_gammacheck(args: SweepArgs) -> ExitCode {
    let cfg = match build_config(&args) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    configure_workers(cfg.jobs);
    let mut reports = harness::run_reduction_checks(&cfg);
    let float_ids: Vec<String> = catalog::entries()
        .iter()
        .filter(|e| e.mode() == Mode::Float)
        .map(|e| e.id.clone())
        .collect();
    match harness::run_all(&cfg, Some(&float_ids)) {
        Ok(float_reports) => reports.extend(float_reports),
        Err(e) => return usage_error(&e.to_string()),
    }
    finish(&reports, args.format, &args.out)
}

fn run_bench(args: BenchArgs) -> ExitCode {
    let rows = harness::bench_series(&harness::BENCH_SIZES);
    let body = match args.format {
        Format::Json => report::bench_to_json(&rows),
        Format::Csv => report::bench_to_csv(&rows),
        Format::Table => report::bench_to_table(&rows),
    };
    if let Err(e) = emit(&args.out, &body) {
        return usage_error(&e);
    }
    if rows.iter().all(|r| r.equal) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_list(args: ListArgs) -> ExitCode {
    let body = match args.format {
        Format::Json => report::catalog_to_json(),
        Format::Csv => report::catalog_to_csv(),
        Format::Table => report::catalog_to_table(),
    };
    match emit(&args.out, &body) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(&e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List(args) => run_list(args),
        Command::Verify(args) => run_verify(args),
        Command::Derivcheck(args) => run_derivcheck(args),
        Command::Gammacheck(args) => run_gammacheck(args),
        Command::Bench(args) => run_bench(args),
    }
}
