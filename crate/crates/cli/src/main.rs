//! `msmpoly`: evaluate operators, images and identities at a point, and
//! verify them over parameter grids.
//!
//! Exit codes: 0 all checks pass, 1 some check fails, 2 domain or
//! configuration error, 3 convergence failure.

mod eval;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use msmpoly::verify::{self, render_report, Summary, SweepRow, Verdict, VerificationRecord, VerifyConfig};
use msmpoly::Error;

#[derive(Parser, Debug)]
#[command(name = "msmpoly", version, about = "Fractional operators on Jacobi-type polynomials")]
struct Cli {
    /// Flat `key = value` verification config
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output file (records, CSV, report or JSON depending on the verb)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Use the formulas exactly as printed instead of the corrected ones
    #[arg(long, global = true)]
    as_printed: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function, image or identity at a point
    Eval(Box<eval::EvalArgs>),
    /// Check every configured grid point and write JSON-lines records
    Verify(RunArgs),
    /// Tabulate closed-form, oracle and quadrature values as CSV
    Sweep(RunArgs),
    /// Summarize a JSON-lines record file
    Report {
        /// Records written by `verify`
        input: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    /// Config override, repeatable: `--set msm-left-poly.n=0..=2`
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    /// Worker threads (0: one per core)
    #[arg(long)]
    threads: Option<usize>,
}

pub(crate) enum Failure {
    Domain(String),
    Convergence(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConverged { .. } | Error::Divergence(_) => Failure::Convergence(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

fn load_config(cli: &Cli, run: &RunArgs) -> Result<VerifyConfig, Failure> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Domain(format!("cannot read config {}: {e}", path.display())))?;
            VerifyConfig::parse(&text)?
        }
        None => VerifyConfig::default(),
    };
    for o in &run.overrides {
        let (k, v) = o
            .split_once('=')
            .ok_or_else(|| Failure::Domain(format!("override '{o}' is not KEY=VALUE")))?;
        cfg.set(k.trim(), v.trim())?;
    }
    if let Some(t) = run.threads {
        cfg.threads = t;
    }
    if cli.as_printed {
        cfg.set("as_printed", "true")?;
    }
    if let Some(out) = &cli.out {
        cfg.out = Some(out.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn exit_for(records: &[VerificationRecord]) -> ExitCode {
    if records.iter().any(|r| r.verdict == Verdict::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify(cli: &Cli, run: &RunArgs) -> Result<ExitCode, Failure> {
    let cfg = load_config(cli, run)?;
    let records = verify::run(&cfg)?;
    let mut buf = Vec::new();
    for r in &records {
        serde_json::to_writer(&mut buf, r).expect("records serialize");
        buf.push(b'\n');
    }
    write_output(cfg.out.as_deref(), &buf)?;
    let line = format!("summary: {}", Summary::of(&records).line());
    if cfg.out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(exit_for(&records))
}

fn cmd_sweep(cli: &Cli, run: &RunArgs) -> Result<ExitCode, Failure> {
    let cfg = load_config(cli, run)?;
    let records = verify::run(&cfg)?;
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    for r in &records {
        w.serialize(SweepRow::from(r))
            .map_err(|e| Failure::Domain(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Domain(format!("csv: {e}")))?;
    write_output(cfg.out.as_deref(), &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_report(cli: &Cli, input: &Path) -> Result<ExitCode, Failure> {
    let text =
        fs::read_to_string(input).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", input.display())))?;
    let records = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str::<VerificationRecord>(l)
                .map_err(|e| Failure::Domain(format!("{} line {}: {e}", input.display(), i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    write_output(cli.out.as_deref(), render_report(&records).as_bytes())?;
    Ok(exit_for(&records))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => eval::run(args, cli.as_printed, cli.out.as_deref()),
        Command::Verify(run) => cmd_verify(&cli, run),
        Command::Sweep(run) => cmd_sweep(&cli, run),
        Command::Report { input } => cmd_report(&cli, input),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Convergence(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
