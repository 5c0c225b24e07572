use std::io::Write;

use anyhow::Result;
use rees_core::rees::ReesReport;
use serde::Serialize;
use serde_json::Value;

use crate::config::{Format, RunConfig};

pub const TOOL: &str = "rees-kit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: &'a RunConfig,
    pub label: Option<&'a str>,
    pub report: &'a ReesReport,
}

impl<'a> Envelope<'a> {
    pub fn new(config: &'a RunConfig, label: Option<&'a str>, report: &'a ReesReport) -> Self {
        Self {
            tool: TOOL,
            version: VERSION,
            config,
            label,
            report,
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Flat projection of a report, one CSV row.
#[derive(Serialize)]
struct CsvReport {
    tool: &'static str,
    version: &'static str,
    characteristic: u64,
    order: String,
    method: String,
    seed: u64,
    label: String,
    variables: String,
    ideal: String,
    reduction: String,
    complete: bool,
    aci: bool,
    generator_degree: Option<u32>,
    colength_i: Option<u64>,
    colength_j: Option<u64>,
    length_i_over_j: Option<u64>,
    h_vector_j_colon_a: Option<String>,
    colength_i1_phi: Option<u64>,
    red: Option<u32>,
    f_sequence: Option<String>,
    f_sum: Option<u64>,
    e0: Option<i64>,
    e1: Option<i64>,
    acm: Option<bool>,
    birational: Option<bool>,
    reltype: Option<u32>,
    sdeg: Option<u32>,
    edeg: Option<u64>,
    nu_t: Option<usize>,
    candidate_equal: Option<bool>,
    failed_checks: String,
    errors: String,
}

impl CsvReport {
    fn new(env: &Envelope) -> Self {
        let r = env.report;
        Self {
            tool: env.tool,
            version: env.version,
            characteristic: env.config.characteristic,
            order: env.config.order.clone(),
            method: format!("{:?}", env.config.method).to_lowercase(),
            seed: env.config.seed,
            label: env.label.unwrap_or_default().to_string(),
            variables: r.variables.join(","),
            ideal: r.ideal.join(", "),
            reduction: r.reduction.join(", "),
            complete: r.complete,
            aci: r.aci,
            generator_degree: r.generator_degree,
            colength_i: r.colength_i,
            colength_j: r.colength_j,
            length_i_over_j: r.length_i_over_j,
            h_vector_j_colon_a: r.h_vector_j_colon_a.as_ref().map(|h| join(&h.0)),
            colength_i1_phi: r.colength_i1_phi,
            red: r.red,
            f_sequence: r.f_sequence.as_deref().map(join),
            f_sum: r.f_sum,
            e0: r.e0,
            e1: r.e1,
            acm: r.acm,
            birational: r.birational,
            reltype: r.reltype,
            sdeg: r.sdeg,
            edeg: r.edeg,
            nu_t: r.nu_t,
            candidate_equal: r.candidate.as_ref().map(|c| c.equal()),
            failed_checks: r.failed_checks().join(" "),
            errors: r.errors.iter().map(|e| format!("{}: {}", e.stage, e.message)).collect::<Vec<_>>().join("; "),
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("({})", xs.iter().map(text_value).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn write_text(out: &mut dyn Write, env: &Envelope) -> Result<()> {
    writeln!(out, "{} {}  characteristic {}", env.tool, env.version, env.config.characteristic)?;
    if let Some(label) = env.label {
        writeln!(out, "label: {label}")?;
    }
    let Value::Object(fields) = serde_json::to_value(env.report)? else {
        unreachable!()
    };
    for (k, v) in &fields {
        match v {
            Value::Null => {}
            Value::Array(xs) if xs.is_empty() => {}
            Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_string()) => {
                writeln!(out, "{k}:")?;
                for x in xs {
                    writeln!(out, "  {}", text_value(x))?;
                }
            }
            Value::Object(m) => {
                writeln!(out, "{k}:")?;
                for (kk, vv) in m {
                    writeln!(out, "  {kk}: {}", text_value(vv))?;
                }
            }
            _ => writeln!(out, "{k}: {}", text_value(v))?,
        }
    }
    Ok(())
}

pub fn write_report(out: &mut dyn Write, format: Format, env: &Envelope) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, env)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(CsvReport::new(env))?;
            w.flush()?;
        }
        Format::Text => write_text(out, env)?,
    }
    Ok(())
}
