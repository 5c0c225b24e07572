use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use rees_core::families::FamilySpec;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::config::{Format, RunConfig};
use crate::family::run_instance;
use crate::output::{TOOL, VERSION};
use crate::with_field;

const QUICK: &str = include_str!("../expectations/quick.json");
const FULL: &str = include_str!("../expectations/full.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Quick,
    #[value(alias = "paper")]
    Full,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Quick)]
    pub suite: Suite,

    /// Expectation file replacing the built-in suite.
    #[arg(long)]
    pub expectations: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
pub struct ExpectationFile {
    pub suite: String,
    pub cases: Vec<Case>,
}

#[derive(Debug, Deserialize)]
pub struct Case {
    pub name: String,
    pub family: FamilySpec,
    /// Dotted report paths and their required values.
    pub expect: Map<String, Value>,
    /// Compared and reported, but a mismatch is only a warning.
    #[serde(default)]
    pub informational: Map<String, Value>,
}

#[derive(Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub status: &'static str,
    pub mismatches: Vec<String>,
    pub warnings: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    suite: &'a str,
    passed: usize,
    failed: usize,
    cases: &'a [CaseResult],
}

fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, key| cur.get(key))
}

fn compare(report: &Value, expect: &Map<String, Value>) -> Vec<String> {
    expect
        .iter()
        .filter_map(|(path, want)| {
            let got = lookup(report, path).unwrap_or(&Value::Null);
            (got != want).then(|| format!("{path}: expected {want}, got {got}"))
        })
        .collect()
}

fn run_case(cfg: &RunConfig, case: &Case) -> Result<CaseResult> {
    let start = Instant::now();
    let report = with_field!(cfg, |f| match case.family.instantiate(f, cfg.limits()) {
        Ok(inst) => Ok(run_instance(cfg, &inst)),
        Err(e) => Err(e),
    });
    let elapsed_ms = cfg.timings.then(|| start.elapsed().as_millis() as u64);
    let (mismatches, warnings) = match report {
        Ok(rep) => {
            let value = serde_json::to_value(&rep)?;
            let mut bad = compare(&value, &case.expect);
            for e in &rep.errors {
                bad.push(format!("stage {} failed: {}", e.stage, e.message));
            }
            let failed = rep.failed_checks();
            if !failed.is_empty() {
                bad.push(format!("internal checks failed: {}", failed.join(" ")));
            }
            (bad, compare(&value, &case.informational))
        }
        Err(e) => (vec![format!("instance construction failed: {e}")], Vec::new()),
    };
    let status = match (mismatches.is_empty(), warnings.is_empty()) {
        (false, _) => "FAIL",
        (true, false) => "WARN",
        (true, true) => "PASS",
    };
    Ok(CaseResult {
        name: case.name.clone(),
        status,
        mismatches,
        warnings,
        elapsed_ms,
    })
}

pub fn load(args: &VerifyArgs) -> Result<ExpectationFile> {
    let (text, source) = match &args.expectations {
        Some(path) => (
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
            path.display().to_string(),
        ),
        None => match args.suite {
            Suite::Quick => (QUICK.to_string(), "built-in quick suite".into()),
            Suite::Full => (FULL.to_string(), "built-in full suite".into()),
        },
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {source}"))
}

/// Returns the exit code: 0 when every case passes, 3 otherwise.
pub fn cmd_verify(cfg: &RunConfig, args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let file = load(args)?;
    let results = file.cases.iter().map(|c| run_case(cfg, c)).collect::<Result<Vec<_>>>()?;
    let failed = results.iter().filter(|r| r.status == "FAIL").count();
    match cfg.format {
        Format::Json => {
            let doc = VerifyOutput {
                tool: TOOL,
                version: VERSION,
                config: cfg,
                suite: &file.suite,
                passed: results.len() - failed,
                failed,
                cases: &results,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "case", "status", "mismatches", "warnings", "elapsed_ms"])?;
            for r in &results {
                let ms = r.elapsed_ms.map(|m| m.to_string()).unwrap_or_default();
                w.write_record([file.suite.as_str(), &r.name, r.status, &r.mismatches.join("; "), &r.warnings.join("; "), &ms])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{TOOL} {VERSION}  suite {}  characteristic {}", file.suite, cfg.characteristic)?;
            for r in &results {
                let ms = r.elapsed_ms.map(|m| format!("  {m} ms")).unwrap_or_default();
                writeln!(out, "{}  {}{ms}", r.status, r.name)?;
                for m in r.mismatches.iter().chain(&r.warnings) {
                    writeln!(out, "      {m}")?;
                }
            }
            writeln!(out, "{} passed, {failed} failed", results.len() - failed)?;
        }
    }
    Ok(if failed == 0 { 0 } else { 3 })
}
