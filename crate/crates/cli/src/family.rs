use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use rees_core::families::{BinaryMatrix, FamilyInstance, FamilySpec, HfTag};
use rees_core::rees::{analyze, check_candidate, ReesReport, StageError};
use rees_core::Field;

use crate::config::RunConfig;

#[derive(Clone, Debug, Args)]
pub struct FamilyArgs {
    /// mono, binary, quadrics, quaternary, northcott or link.
    #[arg(long, required_unless_present = "spec")]
    pub name: Option<String>,

    /// JSON family spec, e.g. {"name":"quaternary_example","tag":"hf141"}.
    #[arg(long, conflicts_with = "name")]
    pub spec: Option<PathBuf>,

    /// Exponents for mono: d pure powers followed by d mixed exponents.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<u32>,

    /// Degree for the binary linear-syzygy family.
    #[arg(long)]
    pub n: Option<u32>,

    /// Explicit 3x2 binary matrix, rows separated by ';', entries by ','.
    #[arg(long)]
    pub matrix: Option<String>,

    /// Hilbert function tag for quaternary: hf141, hf131 or hf121.
    #[arg(long)]
    pub tag: Option<String>,

    /// Variables for link.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,

    /// Generators of J for link, or of V for northcott.
    #[arg(long)]
    pub j: Option<String>,

    /// Generators of K for link; the maximal ideal when omitted.
    #[arg(long)]
    pub k: Option<String>,

    /// 4x4 matrix for northcott, rows separated by ';'.
    #[arg(long)]
    pub a: Option<String>,
}

fn list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn rows(text: &str) -> Vec<Vec<String>> {
    text.split(';').map(list).collect()
}

impl FamilyArgs {
    pub fn spec(&self, cfg: &RunConfig) -> Result<FamilySpec> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return serde_json::from_str(&text).with_context(|| format!("parsing family spec {}", path.display()));
        }
        let name = self.name.as_deref().unwrap_or_default();
        Ok(match name {
            "mono" | "monomial" | "monomial_aci" => FamilySpec::MonomialAci { params: self.params.clone() },
            "binary" | "binary_matrix" => {
                let matrix = match (&self.matrix, self.n) {
                    (Some(m), None) => BinaryMatrix::Explicit { rows: rows(m) },
                    (None, Some(n)) => BinaryMatrix::Linear { n },
                    _ => bail!("binary needs exactly one of --n or --matrix"),
                };
                FamilySpec::BinaryMatrix { matrix }
            }
            "quadrics" => FamilySpec::BinaryMatrix {
                matrix: BinaryMatrix::QuadricSearch { seed: cfg.seed },
            },
            "quaternary" | "quaternary_example" => {
                let tag: HfTag = self.tag.as_deref().context("quaternary needs --tag")?.parse()?;
                FamilySpec::QuaternaryExample { tag }
            }
            "northcott" => FamilySpec::Northcott {
                v: self.j.as_deref().map(list),
                a: self.a.as_deref().map(rows),
            },
            "link" => FamilySpec::Link {
                vars: self.vars.clone(),
                j: list(self.j.as_deref().context("link needs --j")?),
                k: self.k.as_deref().map(list),
            },
            other => bail!("unknown family {other:?}"),
        })
    }
}

/// Analyzes an instance; runs the candidate comparison when it has one.
pub fn run_instance<F: Field>(cfg: &RunConfig, inst: &FamilyInstance<F>) -> ReesReport {
    let mut rep = analyze(&inst.ring, &inst.ideal, &inst.reduction, &cfg.analyze_options());
    if let Some(c) = &inst.candidate {
        match check_candidate(&inst.ring, &c.forms, &c.t_names, &c.equations, cfg.analyze_options().method) {
            Ok(check) => {
                rep.checks.insert("candidate_equals_rees_ideal".into(), check.equal());
                rep.candidate = Some(check);
            }
            Err(e) => {
                rep.complete = false;
                rep.errors.push(StageError {
                    stage: "candidate".into(),
                    message: e.to_string(),
                });
            }
        }
    }
    rep
}
