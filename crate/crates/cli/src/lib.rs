//! Command-line front end for the claim registry: prime selection, sweeps
//! and CSV/JSON/table reports.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use supercong::arith::is_prime;
use supercong::primes::primes_in;
use supercong::{ClaimReport, ClaimStatus, Error, Registry, SweepConfig, SweepSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "supercong", version, about = "Verify binomial supercongruences prime by prime")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the registry: id, status, excluded primes, location.
    List {
        /// Also print each claim's statement.
        #[arg(long)]
        verbose: bool,
    },
    /// Sweep claims over a range of primes (the default command).
    Run(RunArgs),
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Comma-separated claim ids, or "all".
    #[arg(long, value_delimiter = ',', default_value = "all")]
    claims: Vec<String>,

    /// Primes to test: ranges "a..b" (inclusive) and single primes, comma-separated.
    #[arg(long, default_value = "3..100")]
    primes: String,

    /// Primes to drop from the sweep.
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<u64>,

    /// Sampled points per property claim when the domain is not exhausted.
    #[arg(long, default_value_t = 100)]
    samples: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    threads: usize,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Count conjectural failures toward the exit status.
    #[arg(long)]
    strict_conjectures: bool,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Record per-pair wall time in the `micros` column.
    #[arg(long)]
    timings: bool,

    #[arg(long, hide = true)]
    with_fixture: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
    Table,
}

/// Parses `"5..1000,1009"` into a sorted, deduplicated list of primes.
pub fn parse_primes(spec: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let lo: u64 = a.trim().parse().map_err(|_| format!("bad range start in `{part}`"))?;
            let hi: u64 = b.trim().parse().map_err(|_| format!("bad range end in `{part}`"))?;
            if lo > hi {
                return Err(format!("empty range `{part}`"));
            }
            out.extend(primes_in(lo, hi));
        } else {
            let p: u64 = part.parse().map_err(|_| format!("bad prime `{part}`"))?;
            if !is_prime(p) {
                return Err(format!("{p} is not prime"));
            }
            out.push(p);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Some(Command::List { verbose }) => list(stdout, verbose).map(|_| EXIT_OK),
        Some(Command::Run(args)) => sweep(&args, stdout, stderr),
        None => sweep(&cli.run, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn list(out: &mut dyn Write, verbose: bool) -> Result<(), CliError> {
    let reg = Registry::new();
    let width = reg.claims().iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in reg.claims() {
        let kind = if c.is_property() { "property" } else { "pointwise" };
        let line = format!("{} {} {} {}", c.id, c.status, c.excluded_label(), c.location);
        if verbose {
            writeln!(out, "{line:<w$}  {kind:<9}  {}", c.statement, w = width + 26)?;
        } else {
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

fn sweep(args: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let reg = if args.with_fixture { Registry::with_fixture() } else { Registry::new() };
    reg.select(&args.claims).map_err(|e| match e {
        Error::UnknownClaim(id) => CliError::Usage(format!("unknown claim id `{id}` (see `supercong list`)")),
        other => CliError::Usage(other.to_string()),
    })?;
    let mut primes = parse_primes(&args.primes).map_err(CliError::Usage)?;
    primes.retain(|p| !args.exclude.contains(p));
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let cfg = SweepConfig {
        claims: args.claims.clone(),
        primes,
        threads: args.threads,
        seed: args.seed,
        samples: args.samples,
        timings: args.timings,
    };
    let (reports, summary) = reg.sweep(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;

    match &args.out {
        Some(path) => {
            let mut f = io::BufWriter::new(File::create(path)?);
            write_report(&mut f, &reports, args.format)?;
            f.flush()?;
        }
        None => write_report(stdout, &reports, args.format)?,
    }
    write_summary(stderr, &summary)?;

    Ok(if summary.exit_ok(args.strict_conjectures) { EXIT_OK } else { EXIT_FAILURES })
}

fn write_report(out: &mut dyn Write, reports: &[ClaimReport], format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(r).map_err(|e| CliError::Io(io::Error::other(e)))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports).map_err(|e| CliError::Io(io::Error::other(e)))?;
            writeln!(out)?;
        }
        Format::Table => {
            let w = |f: fn(&ClaimReport) -> usize, h: &str| reports.iter().map(f).max().unwrap_or(0).max(h.len());
            let wc = w(|r| r.claim.len(), "claim");
            let wp = w(|r| r.p.to_string().len(), "p");
            let wv = w(|r| r.verdict.to_string().len(), "verdict");
            let wm = w(|r| r.modulus.len(), "mod");
            writeln!(out, "{:<wc$}  {:>wp$}  {:<wv$}  {:<wm$}  lhs | rhs | case", "claim", "p", "verdict", "mod")?;
            for r in reports {
                writeln!(
                    out,
                    "{:<wc$}  {:>wp$}  {:<wv$}  {:<wm$}  {} | {} | {}",
                    r.claim,
                    r.p,
                    r.verdict.to_string(),
                    r.modulus,
                    r.lhs,
                    r.rhs,
                    r.case
                )?;
            }
        }
    }
    Ok(())
}

fn write_summary(err: &mut dyn Write, s: &SweepSummary) -> io::Result<()> {
    for t in &s.per_claim {
        let status = t.status.map(|s| s.to_string()).unwrap_or_default();
        writeln!(err, "{} {status}: {} pass, {} fail, {} inapplicable", t.claim, t.pass, t.fail, t.inapplicable)?;
    }
    let conj = s.per_claim.iter().filter(|t| t.status == Some(ClaimStatus::Conjectural)).count();
    writeln!(
        err,
        "proved failures: {}, conjectural failures: {} ({conj} conjectural claims)",
        s.proved_failures, s.conjectural_failures
    )
}
