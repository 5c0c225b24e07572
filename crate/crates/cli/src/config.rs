use std::time::Duration;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use rees_core::rees::{AnalyzeOptions, ReesMethod};
use rees_core::{is_prime, GbLimits, PrimeField, Rationals};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Elimination,
    Saturation,
}

/// Settings shared by every subcommand. Embedded verbatim in each report.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RunConfig {
    /// Field characteristic: 0 for the rationals, otherwise an odd prime below 2^31.
    #[arg(long, global = true, default_value_t = 32003)]
    pub characteristic: u64,

    /// Monomial order for ideal membership and Hilbert functions.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,

    /// How the Rees ideal is computed.
    #[arg(long, global = true, value_enum, default_value_t = Method::Elimination)]
    pub method: Method,

    /// Maximum S-pair reductions per Groebner basis.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub budget: u64,

    /// Wall-clock limit per Groebner basis, in seconds.
    #[arg(long, global = true)]
    pub timeout: Option<u64>,

    #[arg(long, global = true, default_value_t = 20)]
    pub sdeg_bound: u32,

    #[arg(long, global = true, default_value_t = 64)]
    pub reduction_bound: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Record wall-clock timings. Reports are no longer byte-reproducible.
    #[arg(long, global = true)]
    pub timings: bool,
}

pub enum AnyField {
    Fp(PrimeField),
    Q(Rationals),
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let p = self.characteristic;
        if p != 0 && (p == 2 || p >= 1 << 31 || !is_prime(p)) {
            bail!("characteristic must be 0 or an odd prime below 2^31, got {p}");
        }
        if self.order != "grevlex" {
            bail!("unsupported order {:?}: only grevlex is available", self.order);
        }
        Ok(())
    }

    pub fn field(&self) -> Result<AnyField> {
        self.validate()?;
        Ok(match self.characteristic {
            0 => AnyField::Q(Rationals),
            p => AnyField::Fp(PrimeField::new(p as u32)?),
        })
    }

    pub fn limits(&self) -> GbLimits {
        GbLimits {
            max_reductions: self.budget,
            timeout: self.timeout.map(Duration::from_secs),
        }
    }

    pub fn analyze_options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            sdeg_bound: self.sdeg_bound,
            reduction_bound: self.reduction_bound,
            method: match self.method {
                Method::Elimination => ReesMethod::Elimination,
                Method::Saturation => ReesMethod::Saturation,
            },
            record_timings: self.timings,
            ..AnalyzeOptions::default()
        }
    }
}

/// Runs `$body` with `$f` bound to the configured field.
#[macro_export]
macro_rules! with_field {
    ($cfg:expr, |$f:ident| $body:expr) => {
        match $cfg.field()? {
            $crate::config::AnyField::Fp($f) => $body,
            $crate::config::AnyField::Q($f) => $body,
        }
    };
}
