//! Command-line harness over `qtrunc-core`: grids of verification suites,
//! coefficient tables, and text/JSON/CSV reports.
//!
//! Exit codes: 0 when every check passes, 1 on any violation, 2 on a usage
//! or parameter error.

pub mod grid;
pub mod output;
pub mod suites;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qtrunc_core::partitions::PartitionTable;
use rayon::prelude::*;

use grid::{usage, Grid, Span, UsageError};
use output::Format;
use suites::{Outcome, Suite};

/// Environment variable for the worker count; unset or 0 means one per core.
pub const WORKERS_ENV: &str = "QTRUNC_WORKERS";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qtrunc", version, about = "Exact checks of truncated theta-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite over a parameter grid.
    Verify(Opts),
    /// Print a coefficient or count table (gz, theorem13, conjecture,
    /// recurrence117, mk, theorem12, corollary14).
    Table(Opts),
}

/// Ranges are written `a` or `a..b` (both ends included).
#[derive(Debug, Args)]
struct Opts {
    suite: String,
    #[arg(long = "R", allow_hyphen_values = true)]
    r: Option<Span>,
    #[arg(long = "S", allow_hyphen_values = true)]
    s: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    kmax: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    nmax: Option<i64>,
    /// Truncation order (default 100).
    #[arg(long = "N", allow_hyphen_values = true)]
    order: Option<i64>,
    /// text, json or csv
    #[arg(long, default_value = "text")]
    format: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Opts {
    fn grid(&self) -> Grid {
        Grid {
            r: self.r,
            s: self.s,
            k: self.k,
            kmax: self.kmax,
            m: self.m,
            n: self.n,
            nmax: self.nmax,
            order: self.order,
        }
    }
}

fn pool() -> Result<rayon::ThreadPool, UsageError> {
    let workers = match std::env::var(WORKERS_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| usage!("{WORKERS_ENV}={v:?} is not a count"))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| usage!("worker pool: {e}"))
}

/// Run every grid point; results come back in grid order whatever order
/// the workers finish in.
pub fn verify(suite: Suite, grid: &Grid) -> Result<Vec<Outcome>, UsageError> {
    let jobs = suites::jobs(suite, grid)?;
    let table = PartitionTable::new(suites::table_size(&jobs));
    let results: Vec<_> =
        pool()?.install(|| jobs.par_iter().map(|j| suites::run_job(j, &table)).collect());
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// 0 when every report passes, 1 otherwise.
pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().all(|o| o.report.pass()) {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }
}

enum Failure {
    Usage(UsageError),
    Io(io::Error),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn sink<'a>(path: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| usage!("cannot create {}: {e}", p.display()))?,
        )),
        None => Box::new(stdout),
    })
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Verify(opts) => {
            let suite: Suite = opts.suite.parse()?;
            let format: Format = opts.format.parse()?;
            let outcomes = verify(suite, &opts.grid())?;
            let mut out = sink(&opts.out, stdout)?;
            output::write_outcomes(&outcomes, format, &mut out)?;
            out.flush()?;
            Ok(exit_code(&outcomes))
        }
        Command::Table(opts) => {
            let format: Format = opts.format.parse()?;
            let table = suites::table(&opts.suite, &opts.grid())?;
            let mut out = sink(&opts.out, stdout)?;
            output::write_table(&table, format, &mut out)?;
            out.flush()?;
            Ok(EXIT_PASS)
        }
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return e.exit_code();
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtrunc_core::{CheckReport, Params, Violation, Witness};

    #[test]
    fn one_violation_anywhere_fails_the_run() {
        let ok: Outcome = CheckReport::new("gz", Params::default()).into();
        let mut bad = CheckReport::new("gz", Params::default().with_k(2));
        bad.push(Violation::new(Witness::Degree(7), ">= 0", -3));
        assert_eq!(exit_code(&[ok.clone(), ok.clone()]), EXIT_PASS);
        assert_eq!(exit_code(&[ok.clone(), bad.into(), ok]), EXIT_VIOLATION);
        assert_eq!(exit_code(&[]), EXIT_PASS);
    }

    #[test]
    fn in_process_run() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["qtrunc", "verify", "jacobi-cube", "--N", "50"], &mut out, &mut err);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(String::from_utf8(out).unwrap(), "PASS jacobi-cube [N=50]\nall 1 checks passed\n");
        let code = run(["qtrunc", "verify", "jacobi-cube", "--N", "x"], &mut Vec::new(), &mut err);
        assert_eq!(code, EXIT_USAGE);
    }
}
