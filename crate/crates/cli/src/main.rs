use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sympchar_cli::{run, CaseSpec, Check, ModeKind, OutputFormat, RunConfig};
use sympchar_core::permchar::{Bounds, DEFAULT_SAMPLE_COUNT};

#[derive(Parser)]
#[command(name = "sympchar", version, about = "Exact checks on permutation characters of Sp(2m, 2^f)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Half the dimension; pair each --m with a --f.
    #[arg(long = "m", action = clap::ArgAction::Append)]
    m: Vec<usize>,
    /// Field degree, q = 2^f.
    #[arg(long = "f", action = clap::ArgAction::Append)]
    f: Vec<u32>,
    /// Comma-separated check ids, or "all".
    #[arg(long, value_delimiter = ',', default_value = "all")]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value_t = ModeKind::Exhaustive)]
    mode: ModeKind,
    /// Random elements per case in sampled mode.
    #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
    count: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Largest group enumerated element by element.
    #[arg(long)]
    max_enum: Option<u128>,
    /// Largest product domain for orbit counting.
    #[arg(long)]
    max_product: Option<u128>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_checks(raw: &[String]) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    for name in raw.iter().map(|s| s.trim()) {
        if name == "all" {
            checks.extend(Check::ALL);
            continue;
        }
        let c = Check::ALL.into_iter().find(|c| c.id() == name).ok_or_else(|| format!("unknown check '{name}'"))?;
        checks.push(c);
    }
    checks.sort();
    checks.dedup();
    Ok(checks)
}

fn main() -> ExitCode {
    let Command::Verify(args) = Cli::parse().command;

    if let Some(n) = std::env::var("SYMPCHAR_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }

    if args.m.len() != args.f.len() {
        return usage(&format!("got {} --m values but {} --f values", args.m.len(), args.f.len()));
    }
    let checks = match parse_checks(&args.checks) {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    let mut bounds = Bounds::default();
    if let Some(b) = args.max_enum {
        bounds.enumeration = b;
    }
    if let Some(b) = args.max_product {
        bounds.product = b;
    }
    let config = RunConfig {
        cases: args.m.iter().zip(&args.f).map(|(&m, &f)| CaseSpec { m, f }).collect(),
        checks,
        mode: args.mode,
        count: args.count,
        seed: args.seed,
        bounds,
        format: args.format,
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => return usage(&e.0),
    };
    let text = match config.format {
        OutputFormat::Table => report.to_table(),
        OutputFormat::Json => report.to_json() + "\n",
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            let s = report.summary;
            eprintln!("{} checks, {} passed, {} failed", s.total, s.passed, s.failed);
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code())
}
