//! Batch verifier: sweeps check suites over primes and parameters and
//! emits one report per check in a deterministic order.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use supercong::report::{CheckReport, Status, Suite};
use supercong::runner::{
    all_passed, run_open_scan, run_suite, OutputFormat, SuiteConfig, SuiteSelection,
};
use supercong::theorems::DEFAULT_TERM_BUDGET;

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Verifies binomial-sum supercongruences and their supporting identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact binomial and harmonic identities over integer sizes
    Identities(Sweep),
    /// Harmonic-sum catalog, auxiliary lemmas, and binomial transfer congruences
    Congruences(Sweep),
    /// The plain triple box sum mod p^3, oracle against fast route
    Theorem1(Sweep),
    /// The squared triple box sum mod p^2
    #[command(name = "theoremTT")]
    TheoremTt(Sweep),
    /// Truncated-simplex step congruences
    Section5(Sweep),
    /// Double-sum, kernel, and constant-term checks
    Section6(Sweep),
    /// Wilf-Zeilberger certificate pairs over the term grid
    Wz(Sweep),
    /// Abelian-square counting cross-checks
    Abelian(Sweep),
    /// Every suite in one run
    All(Sweep),
    /// Exploratory sweeps that report residues without asserting
    #[command(subcommand)]
    Scan(Scan),
}

impl Command {
    fn selection(&self) -> SuiteSelection {
        match self {
            Command::Identities(_) => SuiteSelection::One(Suite::Identities),
            Command::Congruences(_) => SuiteSelection::One(Suite::Congruences),
            Command::Theorem1(_) => SuiteSelection::One(Suite::Theorem1),
            Command::TheoremTt(_) => SuiteSelection::One(Suite::TheoremTT),
            Command::Section5(_) => SuiteSelection::One(Suite::Section5),
            Command::Section6(_) => SuiteSelection::One(Suite::Section6),
            Command::Wz(_) => SuiteSelection::One(Suite::Wz),
            Command::Abelian(_) => SuiteSelection::One(Suite::Abelian),
            Command::All(_) => SuiteSelection::All,
            Command::Scan(_) => SuiteSelection::All,
        }
    }

    fn sweep(&self) -> &Sweep {
        match self {
            Command::Identities(s)
            | Command::Congruences(s)
            | Command::Theorem1(s)
            | Command::TheoremTt(s)
            | Command::Section5(s)
            | Command::Section6(s)
            | Command::Wz(s)
            | Command::Abelian(s)
            | Command::All(s) => s,
            Command::Scan(Scan::OpenQuestion(s)) => &s.sweep,
        }
    }
}

#[derive(Subcommand)]
enum Scan {
    /// Residues of the truncated and full-box squared sums in n dimensions
    #[command(name = "open-question")]
    OpenQuestion(ScanSweep),
}

#[derive(Args)]
struct Sweep {
    /// Inclusive prime window lo..hi (trial-division primality)
    #[arg(long, default_value = "3..13", value_parser = parse_range)]
    primes: (u64, u64),

    /// Size cap for identity, WZ, and counting sweeps
    #[arg(long, default_value_t = 20)]
    n_max: u64,

    /// Inclusive (r,s,t) radius window lo..hi
    #[arg(long, default_value = "1..2", value_parser = parse_range)]
    rst: (u64, u64),

    /// Inclusive (i,j) cell window lo..hi
    #[arg(long, default_value = "0..2", value_parser = parse_range)]
    ij: (u64, u64),

    /// Worker threads (env VERIFY_JOBS; flag wins)
    #[arg(long)]
    jobs: Option<usize>,

    /// Lattice-point budget for oracle enumerations (env VERIFY_TERM_BUDGET; flag wins)
    #[arg(long)]
    term_budget: Option<u128>,

    /// Report rendering
    #[arg(long, default_value = "table", value_parser = parse_output)]
    output: OutputFormat,

    /// Stop after the first failing report
    #[arg(long)]
    fail_fast: bool,

    /// Include the proof-decomposition grid in the theorem1 suite
    #[arg(long)]
    decomposition: bool,
}

#[derive(Args)]
struct ScanSweep {
    #[command(flatten)]
    sweep: Sweep,

    /// Inclusive dimension window lo..hi for the box sums
    #[arg(long, default_value = "2..4", value_parser = parse_range)]
    dims: (u64, u64),
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let parse_one = |v: &str| v.trim().parse::<u64>().map_err(|e| format!("bad bound {v:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let v = parse_one(s)?;
            Ok((v, v))
        }
    }
}

fn parse_output(s: &str) -> Result<OutputFormat, String> {
    match s {
        "table" => Ok(OutputFormat::Table),
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(format!("unknown output format {other:?} (expected table, json, or csv)")),
    }
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|v| v.parse().ok())
}

fn config_from(sweep: &Sweep, selection: SuiteSelection) -> SuiteConfig {
    SuiteConfig {
        suite: selection,
        prime_lo: sweep.primes.0,
        prime_hi: sweep.primes.1,
        n_max: sweep.n_max,
        rst_lo: sweep.rst.0,
        rst_max: sweep.rst.1,
        ij_lo: sweep.ij.0,
        ij_max: sweep.ij.1,
        jobs: sweep.jobs.or_else(|| env_parse("VERIFY_JOBS")).unwrap_or(1),
        term_budget: sweep
            .term_budget
            .or_else(|| env_parse("VERIFY_TERM_BUDGET"))
            .unwrap_or(DEFAULT_TERM_BUDGET),
        output: sweep.output,
        fail_fast: sweep.fail_fast,
        decomposition: sweep.decomposition,
    }
}

fn emit(reports: &[CheckReport], format: OutputFormat) {
    match format {
        OutputFormat::Table => {
            if !reports.is_empty() {
                println!("{}", CheckReport::table_header());
            }
            for r in reports {
                println!("{}", r.table_line());
            }
        }
        OutputFormat::Json => {
            for r in reports {
                println!("{}", r.json_line());
            }
        }
        OutputFormat::Csv => {
            println!("{}", CheckReport::csv_header());
            for r in reports {
                println!("{}", r.csv_line());
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = config_from(cli.command.sweep(), cli.command.selection());
    let started = Instant::now();
    let result = match &cli.command {
        Command::Scan(Scan::OpenQuestion(scan)) => {
            run_open_scan(&config, scan.dims.0, scan.dims.1)
        }
        _ => run_suite(&config),
    };
    match result {
        Ok(reports) => {
            emit(&reports, config.output);
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            eprintln!(
                "{} reports, {} failed, {} ms",
                reports.len(),
                failed,
                started.elapsed().as_millis()
            );
            if all_passed(&reports) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
