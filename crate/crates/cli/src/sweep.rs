use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Args;
use rees_core::families::{BinaryMatrix, FamilySpec};
use serde::Serialize;

use crate::config::RunConfig;
use crate::family::run_instance;
use crate::with_field;

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    /// mono, binary or quadrics.
    #[arg(long)]
    pub family: String,

    /// Comma-separated values or inclusive ranges, e.g. 4..6,4..6,4..6,1,1,1.
    #[arg(long)]
    pub params: String,
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: String,
    pub complete: bool,
    pub e0: Option<i64>,
    pub e1: Option<i64>,
    pub f_sequence: Option<String>,
    pub f_sum: Option<u64>,
    pub acm: Option<bool>,
    pub red: Option<u32>,
    pub reltype: Option<u32>,
    pub birational: Option<bool>,
    pub error: String,
    pub elapsed_ms: Option<u64>,
}

/// Parses `a..b` (inclusive) or a single value for each comma field and
/// returns the cartesian product in lexicographic order.
pub fn parameter_grid(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut axes = Vec::new();
    for field in text.split(',') {
        let field = field.trim();
        let axis: Vec<u32> = match field.split_once("..") {
            Some((lo, hi)) => {
                let lo: u32 = lo.trim().parse().with_context(|| format!("bad range start in {field:?}"))?;
                let hi: u32 = hi.trim().parse().with_context(|| format!("bad range end in {field:?}"))?;
                (lo..=hi).collect()
            }
            None => vec![field.parse().with_context(|| format!("bad parameter {field:?}"))?],
        };
        axes.push(axis);
    }
    let mut grid = vec![Vec::new()];
    for axis in axes {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(grid)
}

fn spec_for(family: &str, params: &[u32]) -> Result<FamilySpec> {
    Ok(match (family, params) {
        ("mono", _) => FamilySpec::MonomialAci { params: params.to_vec() },
        ("binary", [n]) => FamilySpec::BinaryMatrix {
            matrix: BinaryMatrix::Linear { n: *n },
        },
        ("quadrics", [seed]) => FamilySpec::BinaryMatrix {
            matrix: BinaryMatrix::QuadricSearch { seed: *seed as u64 },
        },
        ("binary" | "quadrics", _) => bail!("{family} takes one parameter"),
        _ => bail!("unknown sweep family {family:?}; expected mono, binary or quadrics"),
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run_row(cfg: &RunConfig, family: &str, params: &[u32]) -> Result<SweepRow> {
    let start = Instant::now();
    let spec = spec_for(family, params)?;
    let mut row = SweepRow {
        family: family.to_string(),
        params: join(params),
        complete: false,
        e0: None,
        e1: None,
        f_sequence: None,
        f_sum: None,
        acm: None,
        red: None,
        reltype: None,
        birational: None,
        error: String::new(),
        elapsed_ms: None,
    };
    let rep = with_field!(cfg, |f| spec.instantiate(f, cfg.limits()).map(|inst| run_instance(cfg, &inst)));
    match rep {
        Ok(rep) => {
            row.complete = rep.all_checks_pass();
            row.e0 = rep.e0;
            row.e1 = rep.e1;
            row.f_sequence = rep.f_sequence.as_deref().map(join);
            row.f_sum = rep.f_sum;
            row.acm = rep.acm;
            row.red = rep.red;
            row.reltype = rep.reltype;
            row.birational = rep.birational;
            let mut errs: Vec<String> = rep.errors.iter().map(|e| format!("{}: {}", e.stage, e.message)).collect();
            errs.extend(rep.failed_checks().iter().map(|c| format!("check {c} failed")));
            row.error = errs.join("; ");
        }
        Err(e) => row.error = format!("setup: {e}"),
    }
    row.elapsed_ms = cfg.timings.then(|| start.elapsed().as_millis() as u64);
    Ok(row)
}

pub fn pool_width() -> Result<usize> {
    match std::env::var("REES_KIT_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => bail!("REES_KIT_THREADS must be a positive integer, got {v:?}"),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Rows are computed concurrently and written in grid order. Returns 2 if
/// any row is incomplete.
pub fn cmd_sweep(cfg: &RunConfig, args: &SweepArgs, out: &mut dyn Write) -> Result<u8> {
    let grid = parameter_grid(&args.params)?;
    if let Some(p) = grid.first() {
        spec_for(&args.family, p)?;
    } else {
        spec_for(&args.family, &[0])?;
    }
    cfg.validate()?;
    let width = pool_width()?.min(grid.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<SweepRow>>>> = grid.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..width {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= grid.len() {
                    break;
                }
                let row = run_row(cfg, &args.family, &grid[k]);
                *slots[k].lock().unwrap() = Some(row);
            });
        }
    });
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
    w.write_record(["family", "params", "complete", "e0", "e1", "f_sequence", "f_sum", "acm", "red", "reltype", "birational", "error", "elapsed_ms"])?;
    let mut incomplete = false;
    for slot in slots {
        let row = slot.into_inner().unwrap().expect("every row is computed")?;
        incomplete |= !row.complete;
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(if incomplete { 2 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_lexicographic() {
        let g = parameter_grid("1..2, 5, 3..4").unwrap();
        assert_eq!(g, vec![vec![1, 5, 3], vec![1, 5, 4], vec![2, 5, 3], vec![2, 5, 4]]);
        assert!(parameter_grid("3..1").unwrap().is_empty());
        assert!(parameter_grid("a..2").is_err());
        assert!(parameter_grid("").is_err());
    }
}
