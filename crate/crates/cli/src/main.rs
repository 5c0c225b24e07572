//! `rees-kit`: Rees algebra invariants of almost complete intersections.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a stage failed (the partial
//! report is still written), 3 a verification expectation did not hold.

mod config;
mod family;
mod output;
mod sweep;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rees_core::rees::{analyze, ReesReport};
use rees_core::{Field, Ring, RingExt};

use config::RunConfig;
use family::{run_instance, FamilyArgs};
use output::{write_report, Envelope};
use sweep::{cmd_sweep, SweepArgs};
use verify::{cmd_verify, VerifyArgs};

#[derive(Debug, Parser)]
#[command(name = "rees-kit", version, about = "Rees algebras of almost complete intersections")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze an ideal I with a reduction J.
    Analyze(AnalyzeArgs),
    /// Build and analyze a named family instance.
    Family(FamilyArgs),
    /// Run a verification suite against its expectations.
    Verify(VerifyArgs),
    /// Analyze a parameter grid and emit one CSV row per instance.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Comma-separated variable names.
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,

    /// Comma-separated generators of I.
    #[arg(long)]
    ideal: String,

    /// Comma-separated generators of J.
    #[arg(long, conflicts_with = "reduction_first")]
    reduction: Option<String>,

    /// Take J to be the first k generators of I.
    #[arg(long)]
    reduction_first: Option<usize>,
}

fn analyze_in<F: Field>(field: F, cfg: &RunConfig, args: &AnalyzeArgs) -> Result<ReesReport> {
    let n = args.vars.len();
    let ring = Ring::with_grading(field, &args.vars, &vec![1; n], n, cfg.limits())?;
    let i = ring.parse_list(&args.ideal).context("parsing --ideal")?;
    let j = match (&args.reduction, args.reduction_first) {
        (Some(text), None) => ring.parse_list(text).context("parsing --reduction")?,
        (None, Some(k)) if k <= i.len() => i[..k].to_vec(),
        (None, Some(k)) => bail!("--reduction-first {k} exceeds the {} generators of I", i.len()),
        _ => bail!("give --reduction or --reduction-first"),
    };
    Ok(analyze(&ring, &i, &j, &cfg.analyze_options()))
}

fn emit(cfg: &RunConfig, label: Option<&str>, rep: &ReesReport, out: &mut dyn Write) -> Result<u8> {
    write_report(out, cfg.format, &Envelope::new(cfg, label, rep))?;
    Ok(if rep.all_checks_pass() { 0 } else { 2 })
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = &cli.config;
    cfg.validate()?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?)),
        None => Box::new(io::stdout().lock()),
    };
    let code = match &cli.command {
        Command::Analyze(args) => {
            let rep = with_field!(cfg, |f| analyze_in(f, cfg, args)?);
            emit(cfg, None, &rep, &mut out)?
        }
        Command::Family(args) => {
            let spec = args.spec(cfg)?;
            let (label, rep) = with_field!(cfg, |f| {
                let inst = spec.instantiate(f, cfg.limits())?;
                (inst.label.clone(), run_instance(cfg, &inst))
            });
            emit(cfg, Some(&label), &rep, &mut out)?
        }
        Command::Verify(args) => cmd_verify(cfg, args, &mut out)?,
        Command::Sweep(args) => cmd_sweep(cfg, args, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
