use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yibre::suite::{list_checks, run_suite, Mutation, Suite, SuiteConfig};

mod catalog;
mod construct;

/// Exact construction and verification of rime R-matrices and related structures.
#[derive(Debug, Parser)]
#[command(name = "yibre", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Build an operator and print it as JSON.
    Construct {
        #[command(subcommand)]
        object: construct::Object,
        /// Write the JSON to this file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over seeded random rational parameters.
    Verify(VerifyArgs),
    /// List catalog families and verification checks.
    Catalog {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// Suite to run: rime, blocks, cg, classical, bezout, rota, poisson, qalg or all.
    #[arg(long)]
    suite: Suite,
    /// Dimension n (2..=6).
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Seed of the parameter generator.
    #[arg(long, env = "YIBRE_SEED", default_value_t = 0)]
    seed: u64,
    /// Random parameter points per check.
    #[arg(long, default_value_t = 10)]
    draws: usize,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Inject a fault into the suite's target check.
    #[arg(long)]
    mutate: Option<MutateArg>,
    /// List the suite's checks without running them.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MutateArg {
    OneEntry,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Construct { object, out } => {
            let json = construct::build(&object)?;
            emit(&serde_json::to_string_pretty(&json)?, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
        Command::Catalog { json } => {
            if json {
                emit(&serde_json::to_string_pretty(&catalog::json()?)?, None)?;
            } else {
                stdout(&catalog::text()?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.list {
        let lines: String = list_checks(args.suite)
            .into_iter()
            .map(|(name, anchor)| format!("{name:<40} {anchor}\n"))
            .collect();
        stdout(&lines)?;
        return Ok(ExitCode::SUCCESS);
    }
    let cfg = SuiteConfig {
        suite: args.suite,
        n: args.n,
        seed: args.seed,
        draws: args.draws,
        mutation: args.mutate.map(|MutateArg::OneEntry| Mutation::OneEntry),
    };
    let report = run_suite(&cfg)?;
    for c in &report.checks {
        let status = serde_json::to_value(c.status)?;
        let status = status.as_str().unwrap_or_default();
        match &c.residual_witness {
            Some(w) => eprintln!("{status:<8} {} ({w})", c.name),
            None => eprintln!("{status:<8} {}", c.name),
        }
    }
    let failed = report.failures().len();
    eprintln!(
        "{} checks, {failed} failed, {} ms",
        report.checks.len(),
        report.wall_time_ms
    );
    emit(&report.to_json(), args.report.as_deref())?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn emit(text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    let text = format!("{text}\n");
    match path {
        Some(p) => fs::write(p, text).map_err(|e| anyhow::anyhow!("writing {}: {e}", p.display())),
        None => stdout(&text),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn stdout(text: &str) -> anyhow::Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}
