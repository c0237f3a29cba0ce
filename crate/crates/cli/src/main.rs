use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use grs_cli::batch::{self, Format};
use grs_cli::{describe, oracle, render};
use grs_core::{obstruction, parse_matrix, parse_pd, KnotInput};

/// Concordance obstructions from correction terms of double branched covers.
#[derive(Parser, Debug)]
#[command(name = "grs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the report for one knot.
    Compute(ComputeArgs),
    /// Compute reports for a JSON-lines file of knot records.
    Batch(BatchArgs),
    /// Check the lattice maximizer against exhaustive box search.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// PD code, or a file containing one.
    #[arg(long)]
    pd: Option<String>,
    /// Reduced negative-definite Goeritz matrix, e.g. "[[-2,1],[1,-3]]".
    #[arg(long)]
    goeritz: Option<String>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Name recorded in the report.
    #[arg(long)]
    name: Option<String>,
    /// Print a human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args, Debug)]
struct BatchArgs {
    #[arg(long)]
    input: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Compare against each record's expected values.
    #[arg(long)]
    verify: bool,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    goeritz: String,
    /// Half-width of the search box.
    #[arg(long = "box", default_value_t = 8)]
    bound: i64,
}

fn pd_text(arg: &str) -> anyhow::Result<(String, Option<String>)> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('[') && path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        Ok((text, stem))
    } else {
        Ok((arg.to_string(), None))
    }
}

fn compute(args: ComputeArgs) -> anyhow::Result<ExitCode> {
    let (input, default_name) = match (&args.input.pd, &args.input.goeritz) {
        (Some(pd), _) => {
            let (text, stem) = pd_text(pd)?;
            match parse_pd(&text) {
                Ok(d) => (KnotInput::Diagram(d), stem),
                Err(e) => return fail(&describe(&e)),
            }
        }
        (None, Some(m)) => match parse_matrix(m) {
            Ok(m) => (KnotInput::Matrix(m), None),
            Err(e) => return fail(&describe(&e)),
        },
        (None, None) => unreachable!("clap requires one input"),
    };
    let name = args.name.or(default_name).unwrap_or_else(|| "knot".into());
    match obstruction(&input, &name) {
        Ok(r) if args.pretty => print!("{}", render::pretty(&r)),
        Ok(r) => println!("{}", render::json_line(&r)),
        Err(e) => return fail(&describe(&e)),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_batch(args: BatchArgs) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let opts = batch::Options { format: args.format, verify: args.verify, jobs: args.jobs };
    let (out, summary) = batch::run(&text, &opts);
    match &args.output {
        Some(p) => std::fs::write(p, out).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{out}"),
    }
    if summary.failed() {
        eprintln!(
            "batch: {} errors, {} mismatches in {} records",
            summary.errors,
            summary.mismatch.unwrap_or(0),
            summary.records
        );
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(args: OracleArgs) -> anyhow::Result<ExitCode> {
    let m = match parse_matrix(&args.goeritz) {
        Ok(m) => m,
        Err(e) => return fail(&describe(&e)),
    };
    match oracle::compare(m, args.bound) {
        Ok(rows) => {
            print!("{}", oracle::render(&rows));
            Ok(if rows.iter().all(oracle::ClassComparison::agrees) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Err(e) => fail(&e.to_string()),
    }
}

fn fail(msg: &str) -> anyhow::Result<ExitCode> {
    eprintln!("{msg}");
    Ok(ExitCode::FAILURE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Batch(a) => run_batch(a),
        Command::Oracle(a) => run_oracle(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error [io]: {e:#}");
        ExitCode::FAILURE
    })
}
