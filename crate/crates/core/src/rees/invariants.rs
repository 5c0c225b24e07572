use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::presentation::ReesPresentation;
use crate::arith::{Field, Monomial, Polynomial, Ring, RingExt};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{colength, dim_and_degree, graded_series, BigradedSeries};

/// `f_j = λ(I^j / J I^{j-1})` for `j = 1..=red`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSequence {
    pub red: u32,
    pub values: Vec<u64>,
}

impl FSequence {
    /// Validates positivity and monotonicity.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.contains(&0) {
            return Err(AlgebraError::Internal("f-sequence has a zero entry".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Internal(format!("f-sequence {values:?} is not non-increasing")));
        }
        Ok(Self {
            red: values.len() as u32,
            values,
        })
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `f_j`, zero beyond the reduction number.
    pub fn get(&self, j: u32) -> u64 {
        if j == 0 {
            return 0;
        }
        self.values.get(j as usize - 1).copied().unwrap_or(0)
    }
}

/// Least `r` with `I^{r+1} = J I^r`, by comparing ideal powers.
pub fn reduction_number<F: Field>(i: &Ideal<F>, j: &Ideal<F>, bound: u32) -> Result<u32> {
    if !i.contains_ideal(j)? {
        return Err(AlgebraError::Containment(format!("{j} is not contained in {i}")));
    }
    let mut pow = Ideal::unit(i.ring());
    for r in 0..=bound {
        let big = pow.product(i)?;
        let small = pow.product(j)?;
        if powers_equal(&big, &small)? {
            return Ok(r);
        }
        pow = big;
    }
    Err(AlgebraError::BoundExceeded {
        what: format!("no r with I^(r+1) = J*I^r; {j} is presumably not a reduction"),
        bound: bound as usize,
    })
}

/// `big = small` given `small ⊆ big`. Equigenerated ideals in one degree are
/// compared by the rank of their generating components.
fn powers_equal<F: Field>(big: &Ideal<F>, small: &Ideal<F>) -> Result<bool> {
    match (big.generating_degree(), small.generating_degree()) {
        (Some(a), Some(b)) if a == b => {
            // Both generator lists are bases of their generating components.
            Ok(big.len() == small.len())
        }
        _ => small.contains_ideal(big),
    }
}

/// f-sequence from colengths of powers: `f_j = λ(R/JI^{j-1}) - λ(R/I^j)`.
pub fn f_sequence<F: Field>(i: &Ideal<F>, j: &Ideal<F>, bound: u32) -> Result<FSequence> {
    let red = reduction_number(i, j, bound)?;
    let mut values = Vec::new();
    let mut prev = Ideal::unit(i.ring());
    for _ in 1..=red {
        let ik = prev.product(i)?;
        let jk = prev.product(j)?;
        values.push(colength(&jk)? - colength(&ik)?);
        prev = ik;
    }
    FSequence::new(values)
}

/// Colengths of powers of `I` and of `J I^{j-1}` read from the bigraded
/// Hilbert series of `B/L` and `B/(L + (T_J))`, where the first `g` forms
/// of the presentation generate `J`.
pub struct PowerLengths {
    rees: BigradedSeries,
    rees_j: BigradedSeries,
    weights: Vec<u32>,
    max_deg: u32,
}

impl PowerLengths {
    pub fn new<F: Field>(pres: &ReesPresentation<F>, g: usize) -> Result<Self> {
        let grading = pres.rees_grading();
        let rees = graded_series(pres.rees_ideal(), &grading)?;
        let tj = Ideal::of_variables(pres.ring(), pres.t_vars().take(g));
        let lj = pres.rees_ideal().sum(&tj)?;
        let rees_j = graded_series(&lj, &grading)?;
        Ok(Self {
            rees,
            rees_j,
            weights: pres.base().weights().iter().map(|&w| w as u32).collect(),
            max_deg: pres.forms().iter().map(|f| f.degree()).max().unwrap_or(1),
        })
    }

    /// `dim R_k` for `k = 0..=kmax`.
    fn dims(&self, kmax: u32) -> Vec<i128> {
        let mut dims = vec![0i128; kmax as usize + 1];
        dims[0] = 1;
        for &w in &self.weights {
            for k in w as usize..dims.len() {
                dims[k] += dims[k - w as usize];
            }
        }
        dims
    }

    /// `(λ(R/I^j), λ(R/J I^{j-1}))` for `j = 1..=jmax`.
    ///
    /// A component equal to `R_k` for `w` consecutive degrees, `w` the
    /// largest variable weight, forces equality in every higher degree.
    pub fn lengths(&self, jmax: u32) -> Result<Vec<(u64, u64)>> {
        let w = self.weights.iter().copied().max().unwrap_or(1) as usize;
        let mut kmax = (jmax + 1) * self.max_deg + 8 * w as u32;
        loop {
            let a = self.rees.table(kmax, jmax);
            let b = self.rees_j.table(kmax, jmax);
            let dims = self.dims(kmax);
            let mut out = Vec::with_capacity(jmax as usize);
            let mut complete = true;
            for j in 1..=jmax as usize {
                let li = tail_length(&dims, |k| a[j][k], w);
                let lji = tail_length(&dims, |k| a[j][k] - b[j][k], w);
                let (Some(li), Some(lji)) = (li, lji) else {
                    complete = false;
                    break;
                };
                if li < 0 || lji < li {
                    return Err(AlgebraError::Internal(format!("inconsistent lengths at power {j}")));
                }
                out.push((li as u64, lji as u64));
            }
            if complete {
                return Ok(out);
            }
            if kmax > 8192 {
                return Err(AlgebraError::NonZeroDimensional);
            }
            kmax *= 2;
        }
    }

    /// `λ(R/I^j)`.
    pub fn colength_power(&self, j: u32) -> Result<u64> {
        Ok(self.lengths(j)?[j as usize - 1].0)
    }

    /// Reduction number and f-sequence, searching up to `bound`.
    pub fn f_sequence(&self, bound: u32) -> Result<FSequence> {
        let mut jmax = 8.min(bound + 1);
        loop {
            let ls = self.lengths(jmax)?;
            if let Some(pos) = ls.iter().position(|&(i, ji)| i == ji) {
                let values = ls[..pos].iter().map(|&(i, ji)| ji - i).collect();
                return FSequence::new(values);
            }
            if jmax > bound {
                return Err(AlgebraError::BoundExceeded {
                    what: "J is presumably not a reduction of I".into(),
                    bound: bound as usize,
                });
            }
            jmax = (2 * jmax).min(bound + 1);
        }
    }
}

/// `Σ_k (dim R_k - dim K_k)` once `K_k = R_k` on a run of `w` degrees.
fn tail_length(dims: &[i128], comp: impl Fn(usize) -> i128, w: usize) -> Option<i128> {
    let mut total = 0i128;
    let mut run = 0;
    for (k, &r) in dims.iter().enumerate() {
        let c = comp(k);
        if k > 0 && c == r {
            run += 1;
            if run == w {
                return Some(total);
            }
        } else {
            run = 0;
            total += r - c;
        }
    }
    None
}

/// Whether `e_1 = Σ f_j`. The inequality `e_1 ≤ Σ f_j` always holds; a
/// violation is reported as an internal error.
pub fn acm_from_e1(e1: i64, fs: &FSequence) -> Result<bool> {
    let s = fs.sum() as i64;
    if e1 > s {
        return Err(AlgebraError::Internal(format!("e1 = {e1} exceeds the f-sequence sum {s}")));
    }
    Ok(e1 == s)
}

/// Largest T-degree of a minimal generator of `L`, checked against the
/// ideal generated by lower T-degrees.
pub fn reltype<F: Field>(pres: &ReesPresentation<F>) -> Result<u32> {
    let degs = pres.generator_bidegrees();
    let top = degs.iter().map(|d| d.1).max().unwrap_or(1).max(1);
    let lower: Vec<Polynomial<F>> = pres
        .rees_ideal()
        .gens()
        .iter()
        .zip(&degs)
        .filter(|(_, d)| d.1 < top)
        .map(|(g, _)| g.clone())
        .collect();
    if !degs.is_empty() {
        let lower = Ideal::new(pres.ring(), lower)?;
        let tops = pres.rees_ideal().gens().iter().zip(&degs).filter(|(_, d)| d.1 == top);
        for (g, _) in tops {
            if lower.contains(g)? {
                return Err(AlgebraError::Internal(format!("generator {g} is not minimal")));
            }
        }
    }
    Ok(top)
}

/// Number of minimal generators of `L` in T-degree at least 2.
pub fn nu_t<F: Field>(pres: &ReesPresentation<F>) -> usize {
    pres.generator_bidegrees().iter().filter(|d| d.1 >= 2).count()
}

/// Least `s ≤ bound` with `m^s L ⊆ (L_1)`.
pub fn sdeg<F: Field>(pres: &ReesPresentation<F>, bound: u32) -> Result<u32> {
    let sym = pres.sym_ideal();
    let d = pres.nbase();
    let nonlinear: Vec<&Polynomial<F>> = pres
        .rees_ideal()
        .gens()
        .iter()
        .zip(pres.generator_bidegrees())
        .filter(|(_, b)| b.1 >= 2)
        .map(|(g, _)| g)
        .collect();
    let gb = sym.gb()?;
    let mut pending: Vec<Polynomial<F>> = Vec::new();
    for g in &nonlinear {
        if !gb.contains(g)? {
            pending.push((*g).clone());
        }
    }
    if pending.is_empty() {
        return Ok(0);
    }
    // pending holds m^{s-1}-multiples not yet in (L_1); multiply by each variable.
    for s in 1..=bound {
        let mut next = Vec::new();
        for g in &pending {
            for v in 0..d {
                let h = g.mul_monomial(&Monomial::var(v, 1))?;
                if !gb.contains(&h)? {
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            return Ok(s);
        }
        next.sort_by_key(|p| p.to_string());
        next.dedup_by(|a, b| a.to_string() == b.to_string());
        pending = next;
    }
    Err(AlgebraError::BoundExceeded {
        what: "m^s L is not contained in (L_1)".into(),
        bound: bound as usize,
    })
}

/// The special fiber ideal `(L + m B) ∩ k[T]` in a ring of the T-variables.
pub fn fiber_ideal<F: Field>(pres: &ReesPresentation<F>) -> Result<Ideal<F>> {
    let b = pres.ring();
    let t_names: Vec<String> = pres.t_vars().map(|i| b.names()[i].clone()).collect();
    let kt = Ring::new(b.field().clone(), &t_names)?;
    let mut images: Vec<Polynomial<F>> = vec![kt.zero(); pres.nbase()];
    images.extend((0..t_names.len()).map(|i| kt.var(i)));
    let gens = pres
        .rees_ideal()
        .gens()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    let fib = Ideal::new(&kt, gens)?;
    if fib.is_zero() {
        return Ok(fib);
    }
    fib.minimalized()
}

/// Degree of the fiber ring `k[T]/F`.
pub fn edeg<F: Field>(fiber: &Ideal<F>) -> Result<u64> {
    let (_, deg) = dim_and_degree(fiber)?;
    if fiber.len() == 1 && deg != fiber.gens()[0].degree() as u64 {
        return Err(AlgebraError::Internal("principal fiber degree mismatch".into()));
    }
    Ok(deg)
}

/// Birationality of an equigenerated m-primary aci in degree `n` over a
/// `d`-dimensional ring: `edeg = n^{d-1}`. The reduction-number and `e_1`
/// criteria must agree when supplied.
pub fn is_birational(edeg: u64, red: Option<u32>, e1: Option<i64>, n: u32, d: u32) -> Result<bool> {
    let nd1 = (n as u64).pow(d - 1);
    let by_edeg = edeg == nd1;
    if let Some(r) = red {
        if (r as u64 + 1 == nd1) != by_edeg {
            return Err(AlgebraError::Internal(format!(
                "edeg = {edeg} and red = {r} disagree on birationality"
            )));
        }
    }
    if let Some(e) = e1 {
        let target = (d as i64 - 1) * ((n as i64).pow(d) - (n as i64).pow(d - 1));
        if (2 * e == target) != by_edeg {
            return Err(AlgebraError::Internal(format!(
                "edeg = {edeg} and e1 = {e} disagree on birationality"
            )));
        }
    }
    Ok(by_edeg)
}

/// Multiplicities of `B/L` and `B/(L_1)` and the formulas relating them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeChecks {
    pub deg_rees: u64,
    pub deg_sym: u64,
    pub deg_t: i64,
    pub rees_formula: bool,
    pub sym_formula: bool,
    pub t_formula: bool,
}

/// Requires an equigenerated presentation of degree `n`.
pub fn degree_checks<F: Field>(pres: &ReesPresentation<F>, length_i_over_j: u64) -> Result<DegreeChecks> {
    let n = pres.forms()[0].degree() as u64;
    if pres.forms().iter().any(|f| f.degree() as u64 != n) {
        return Err(AlgebraError::Precondition("degree formulas need an equigenerated ideal".into()));
    }
    let d = pres.nbase() as u32;
    let (dim_l, deg_rees) = dim_and_degree(pres.rees_ideal())?;
    let (dim_s, deg_sym) = dim_and_degree(pres.sym_ideal())?;
    let expected: u64 = (0..d).map(|j| n.pow(j)).sum();
    let deg_t = deg_sym as i64 - deg_rees as i64;
    Ok(DegreeChecks {
        deg_rees,
        deg_sym,
        deg_t,
        rees_formula: dim_l == d as usize + 1 && deg_rees == expected,
        sym_formula: dim_s == d as usize + 1 && deg_sym == expected + length_i_over_j,
        t_formula: dim_s == dim_l && deg_t == length_i_over_j as i64,
    })
}

/// Minimal generator counts of `L` per T-degree, and the drops `f_s - f_{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreshProfile {
    pub generators_by_t_degree: BTreeMap<u32, usize>,
    pub drops: Vec<(u32, u64)>,
}

impl FreshProfile {
    /// Whether `f_s > f_{s+1}` exactly at the `s` with minimal generators in T-degree `s+1 ≥ 2`.
    pub fn corresponds(&self) -> bool {
        let top = self.drops.len() as u32;
        let with_drop: Vec<u32> = self.drops.iter().filter(|d| d.1 > 0).map(|d| d.0 + 1).collect();
        let with_gens: Vec<u32> = self
            .generators_by_t_degree
            .keys()
            .copied()
            .filter(|&t| t >= 2 && t <= top + 1)
            .collect();
        let beyond = self.generators_by_t_degree.keys().any(|&t| t > top + 1);
        with_drop == with_gens && !beyond
    }
}

pub fn fresh_generator_profile<F: Field>(pres: &ReesPresentation<F>, fs: &FSequence) -> FreshProfile {
    let mut counts = BTreeMap::new();
    for (_, t) in pres.generator_bidegrees() {
        *counts.entry(t).or_insert(0) += 1;
    }
    let drops = (1..=fs.red).map(|s| (s, fs.get(s) - fs.get(s + 1))).collect();
    FreshProfile {
        generators_by_t_degree: counts,
        drops,
    }
}
