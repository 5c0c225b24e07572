use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::invariants::*;
use super::presentation::{default_t_names, CandidateCheck, ReesMethod, ReesPresentation};
use crate::arith::{Field, Polynomial, RingRef};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{colength, fit_window, h_vector, HVector};

pub const REPORT_SCHEMA: &str = "report-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct AnalyzeOptions {
    pub sdeg_bound: u32,
    pub reduction_bound: u32,
    pub method: ReesMethod,
    /// Also compute `L` by the other method and compare.
    pub cross_check_rees: bool,
    /// Recompute the reduction number and f-sequence from ideal powers.
    pub direct_powers: bool,
    pub skip_sdeg: bool,
    pub record_timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            sdeg_bound: 20,
            reduction_bound: 64,
            method: ReesMethod::Elimination,
            cross_check_rees: false,
            direct_powers: false,
            skip_sdeg: false,
            record_timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageError {
    pub stage: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub polynomial: String,
    pub x_degree: u32,
    pub t_degree: u32,
}

/// Every invariant computed for one ideal. Fields are `None` when their
/// stage failed or does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    pub schema: String,
    pub field: String,
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub ideal: Vec<String>,
    pub reduction: Vec<String>,
    pub t_variables: Vec<String>,
    pub presentation: Vec<String>,
    pub complete: bool,
    pub errors: Vec<StageError>,
    pub warnings: Vec<String>,
    pub aci: bool,
    pub generator_degree: Option<u32>,
    pub colength_i: Option<u64>,
    pub colength_j: Option<u64>,
    pub length_i_over_j: Option<u64>,
    pub h_vector_j_colon_a: Option<HVector>,
    pub colength_i1_phi: Option<u64>,
    pub syzygy_count: Option<usize>,
    pub red: Option<u32>,
    pub f_sequence: Option<Vec<u64>>,
    pub f_sum: Option<u64>,
    pub e0: Option<i64>,
    pub e1: Option<i64>,
    pub acm: Option<bool>,
    pub birational: Option<bool>,
    pub reltype: Option<u32>,
    pub sdeg: Option<u32>,
    pub edeg: Option<u64>,
    pub nu_t: Option<usize>,
    pub rees_generators: Vec<GeneratorRecord>,
    pub fiber_generators: Vec<String>,
    pub fresh_profile: Option<FreshProfile>,
    pub degrees: Option<DegreeChecks>,
    pub candidate: Option<CandidateCheck>,
    /// Named consistency checks and their outcomes.
    pub checks: BTreeMap<String, bool>,
    pub timings_ms: Option<Vec<(String, u64)>>,
}

impl ReesReport {
    fn empty<F: Field>(base: &RingRef<F>, i: &[Polynomial<F>], j: &[Polynomial<F>]) -> Self {
        let field = base.field();
        Self {
            schema: REPORT_SCHEMA.to_string(),
            field: field.name(),
            characteristic: field.characteristic(),
            variables: base.names().to_vec(),
            ideal: i.iter().map(|p| p.to_string()).collect(),
            reduction: j.iter().map(|p| p.to_string()).collect(),
            t_variables: Vec::new(),
            presentation: Vec::new(),
            complete: true,
            errors: Vec::new(),
            warnings: Vec::new(),
            aci: false,
            generator_degree: None,
            colength_i: None,
            colength_j: None,
            length_i_over_j: None,
            h_vector_j_colon_a: None,
            colength_i1_phi: None,
            syzygy_count: None,
            red: None,
            f_sequence: None,
            f_sum: None,
            e0: None,
            e1: None,
            acm: None,
            birational: None,
            reltype: None,
            sdeg: None,
            edeg: None,
            nu_t: None,
            rees_generators: Vec::new(),
            fiber_generators: Vec::new(),
            fresh_profile: None,
            degrees: None,
            candidate: None,
            checks: BTreeMap::new(),
            timings_ms: None,
        }
    }

    /// True when every recorded check passed and no stage failed.
    pub fn all_checks_pass(&self) -> bool {
        self.complete && self.checks.values().all(|&v| v)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect()
    }
}

struct Run<'a> {
    report: &'a mut ReesReport,
    timings: Vec<(String, u64)>,
}

impl Run<'_> {
    fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T>) -> Option<T> {
        let start = Instant::now();
        let out = f();
        self.timings.push((name.to_string(), start.elapsed().as_millis() as u64));
        match out {
            Ok(v) => Some(v),
            Err(e) => {
                self.report.complete = false;
                self.report.errors.push(StageError {
                    stage: name.to_string(),
                    message: e.to_string(),
                });
                None
            }
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.report.checks.insert(name.to_string(), ok);
    }
}

/// A generator list for the presentation: the generators of `J` first, then
/// generators of `I` not already in the ideal built so far.
pub fn adapted_forms<F: Field>(i: &[Polynomial<F>], j: &[Polynomial<F>]) -> Result<(Vec<Polynomial<F>>, usize)> {
    let ring = i.first().ok_or_else(|| AlgebraError::Precondition("empty ideal".into()))?.ring();
    let mut forms: Vec<Polynomial<F>> = j.to_vec();
    for f in i {
        let cur = Ideal::new(ring, forms.clone())?;
        if !cur.contains(f)? {
            forms.push(f.clone());
        }
    }
    Ok((forms, j.len()))
}

/// Runs every stage on `I` with designated reduction `J`. Stage failures are
/// recorded in the report, which is then marked incomplete.
pub fn analyze<F: Field>(base: &RingRef<F>, i_gens: &[Polynomial<F>], j_gens: &[Polynomial<F>], opts: &AnalyzeOptions) -> ReesReport {
    let mut report = ReesReport::empty(base, i_gens, j_gens);
    let mut run = Run {
        report: &mut report,
        timings: Vec::new(),
    };
    analyze_into(&mut run, base, i_gens, j_gens, opts);
    let timings = std::mem::take(&mut run.timings);
    if opts.record_timings {
        report.timings_ms = Some(timings);
    }
    report
}

fn analyze_into<F: Field>(run: &mut Run<'_>, base: &RingRef<F>, i_gens: &[Polynomial<F>], j_gens: &[Polynomial<F>], opts: &AnalyzeOptions) {
    let d = base.nvars();
    let setup = run.stage("setup", || {
        let i = Ideal::new(base, i_gens.to_vec())?;
        let j = Ideal::new(base, j_gens.to_vec())?;
        if i.is_zero() || j.is_zero() {
            return Err(AlgebraError::Precondition("I and J must be nonzero".into()));
        }
        if !i.is_homogeneous() || !j.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous("I and J must be homogeneous".into()));
        }
        if !i.contains_ideal(&j)? {
            return Err(AlgebraError::Containment("J is not contained in I".into()));
        }
        let (forms, g) = adapted_forms(i.gens(), j.gens())?;
        Ok((i, j, forms, g))
    });
    let Some((i, j, forms, g)) = setup else { return };
    let extras = forms.len() - g;
    let aci = extras == 1 && g == d;
    run.report.aci = aci;
    run.report.generator_degree = {
        let n = forms[0].degree();
        (base.is_standard_graded() && forms.iter().all(|f| f.degree() == n)).then_some(n)
    };
    let t_names = default_t_names(base, forms.len(), extras == 1);
    run.report.t_variables = t_names.clone();
    run.report.presentation = forms.iter().map(|f| f.to_string()).collect();

    // Lengths.
    let lengths = run.stage("lengths", || {
        let li = colength(&i)?;
        let lj = colength(&j)?;
        Ok((li, lj, lj - li))
    });
    if let Some((li, lj, lij)) = lengths {
        run.report.colength_i = Some(li);
        run.report.colength_j = Some(lj);
        run.report.length_i_over_j = Some(lij);
    }
    let mut j_colon_a = None;
    if aci {
        let a = forms[g].clone();
        if let Some((ja, hv)) = run.stage("j_colon_a", || {
            let ja = j.quotient_poly(&a)?;
            let hv = if base.is_standard_graded() { Some(h_vector(&ja)?) } else { None };
            Ok((ja, hv))
        }) {
            if let Some(hv) = hv {
                run.check("gorenstein_symmetry", hv.is_symmetric());
                if let Some(l) = run.report.length_i_over_j {
                    run.check("colength_j_colon_a_equals_length_i_over_j", hv.sum() == l);
                }
                run.report.h_vector_j_colon_a = Some(hv);
            }
            j_colon_a = Some(ja);
        }
    }

    // Presentation.
    let Some(pres) = run.stage("rees_ideal", || ReesPresentation::new(base, &forms, &t_names, opts.method)) else {
        return;
    };
    run.report.rees_generators = pres
        .rees_ideal()
        .gens()
        .iter()
        .zip(pres.generator_bidegrees())
        .map(|(p, (x, t))| GeneratorRecord {
            polynomial: p.to_string(),
            x_degree: x,
            t_degree: t,
        })
        .collect();
    run.report.syzygy_count = Some(pres.syzygies().ncols());
    let linear_count = pres.generator_bidegrees().iter().filter(|b| b.1 == 1).count();
    run.check("syzygies_match_linear_generators", linear_count == pres.syzygies().ncols());
    if opts.cross_check_rees {
        let other = match opts.method {
            ReesMethod::Elimination => ReesMethod::Saturation,
            ReesMethod::Saturation => ReesMethod::Elimination,
        };
        if let Some(ok) = run.stage("rees_cross_check", || {
            let alt = ReesPresentation::new(base, &forms, &t_names, other)?;
            alt.rees_ideal().equals(pres.rees_ideal())
        }) {
            run.check("rees_methods_agree", ok);
        }
    }

    let i1 = run.stage("i1_phi", || {
        let i1 = pres.i1()?;
        let l = colength(&i1)?;
        Ok((i1, l))
    });
    if let Some((_, l)) = &i1 {
        run.report.colength_i1_phi = Some(*l);
    }

    // f-sequence and Hilbert–Samuel coefficients from the Rees algebra.
    let pl = run.stage("power_lengths", || PowerLengths::new(&pres, g));
    let mut fs = None;
    if let Some(pl) = &pl {
        fs = run.stage("f_sequence", || pl.f_sequence(opts.reduction_bound));
        if let Some(f) = &fs {
            run.report.red = Some(f.red);
            run.report.f_sequence = Some(f.values.clone());
            run.report.f_sum = Some(f.sum());
            if let Some(l) = run.report.length_i_over_j {
                run.check("f1_equals_length_i_over_j", f.get(1) == l);
            }
            let red = f.red;
            let coeffs = run.stage("hilbert_samuel", || {
                let fit = fit_window(d, red, |k| pl.colength_power(k))?;
                Ok((fit.e0(), fit.e1()))
            });
            if let Some((e0, e1)) = coeffs {
                run.report.e0 = Some(e0);
                run.report.e1 = Some(e1);
                if let Some(lj) = run.report.colength_j {
                    run.check("e0_equals_colength_j", e0 == lj as i64);
                }
                if let Some(acm) = run.stage("acm", || acm_from_e1(e1, f)) {
                    run.report.acm = Some(acm);
                }
            }
        }
    }
    // Direct cross-check of f_1, f_2 from ideal powers, always cheap.
    if let Some(f) = &fs {
        if let Some((f1, f2)) = run.stage("direct_f1_f2", || {
            let i2 = i.power(2)?;
            let ji = j.product(&i)?;
            let f1 = colength(&j)? - colength(&i)?;
            let f2 = colength(&ji)? - colength(&i2)?;
            Ok((f1, f2))
        }) {
            run.check("direct_f1_f2_agree", f1 == f.get(1) && f2 == f.get(2));
        }
        if opts.direct_powers {
            if let Some(direct) = run.stage("direct_f_sequence", || f_sequence(&i, &j, opts.reduction_bound)) {
                run.check("direct_f_sequence_agrees", &direct == f);
            }
        }
    }

    // Nonlinear relations.
    let rt = run.stage("reltype", || reltype(&pres));
    run.report.reltype = rt;
    let nu = nu_t(&pres);
    run.report.nu_t = Some(nu);
    if let Some(f) = &fs {
        let prof = fresh_generator_profile(&pres, f);
        run.check("fresh_generator_correspondence", prof.corresponds());
        run.report.fresh_profile = Some(prof);
        if run.report.acm == Some(true) {
            if let Some(r) = rt {
                run.check("acm_reltype_is_red_plus_one", r == f.red + 1);
            }
            if let Some(l) = run.report.length_i_over_j {
                run.check("acm_nu_t_at_most_length_i_over_j", nu as u64 <= l);
            }
        }
    }
    if !opts.skip_sdeg {
        run.report.sdeg = run.stage("sdeg", || sdeg(&pres, opts.sdeg_bound));
    }
    if let Some((fib, e)) = run.stage("fiber", || {
        let fib = fiber_ideal(&pres)?;
        let e = edeg(&fib)?;
        Ok((fib, e))
    }) {
        run.report.fiber_generators = fib.gens().iter().map(|p| p.to_string()).collect();
        run.report.edeg = Some(e);
    }

    // Equigenerated aci statements.
    if let (Some(n), true) = (run.report.generator_degree, aci) {
        if let Some(e) = run.report.edeg {
            let red = run.report.red;
            let e1 = run.report.e1;
            run.report.birational = run.stage("birational", || is_birational(e, red, e1, n, d as u32));
        }
    }
    if run.report.generator_degree.is_some() {
        if let Some(l) = run.report.length_i_over_j {
            if let Some(dc) = run.stage("degrees", || degree_checks(&pres, l)) {
                run.check("deg_rees_formula", dc.rees_formula);
                run.check("deg_sym_formula", dc.sym_formula);
                run.check("deg_t_formula", dc.t_formula);
                run.report.degrees = Some(dc);
            }
        }
    }
    if aci {
        if let (Some(f), Some((i1, l1))) = (&fs, &i1) {
            let f1 = f.get(1) as i64;
            run.check("f2_identity", f.get(2) as i64 == f1 - *l1 as i64);
            if let Some(ja) = &j_colon_a {
                if let Some(eq) = run.stage("f2_colon_criterion", || ja.equals(i1)) {
                    run.check("f2_colon_criterion", (f.red <= 1) == eq);
                }
            }
        }
    }
}

/// Compares a candidate list of equations (in the presentation ring of
/// `forms`) with the computed Rees ideal and records the result.
pub fn check_candidate<F: Field>(
    base: &RingRef<F>,
    forms: &[Polynomial<F>],
    t_names: &[String],
    candidate: &[String],
    method: ReesMethod,
) -> Result<CandidateCheck> {
    let pres = ReesPresentation::new(base, forms, t_names, method)?;
    let cand = Ideal::new(pres.ring(), candidate.iter().map(|s| crate::arith::RingExt::parse(pres.ring(), s)).collect::<Result<Vec<_>>>()?)?;
    super::presentation::verify_rees_candidate(&cand, forms, pres.rees_ideal())
}
