//! Lengths, Hilbert functions and Hilbert–Samuel coefficients.

mod samuel;
mod series;

use serde::{Deserialize, Serialize};

use crate::arith::{Field, Monomial, Polynomial};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;

pub use samuel::{fit_hilbert_samuel, fit_window, hs_coefficients, HsFit};
pub use series::{BigradedSeries, HilbertSeries};
pub(crate) use series::binomial;

/// The Hilbert function of an Artinian graded quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<u64>);

impl HVector {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn standard_homogeneous<F: Field>(p: &Polynomial<F>) -> bool {
    let mut it = p.terms().iter().map(|(m, _)| m.degree());
    match it.next() {
        None => true,
        Some(d) => it.all(|e| e == d),
    }
}

fn leading<F: Field>(i: &Ideal<F>) -> Result<Vec<Monomial>> {
    i.leading_monomials()
}

/// Series of `R/I` for the standard grading, read off the leading ideal.
pub fn hilbert_series<F: Field>(i: &Ideal<F>) -> Result<HilbertSeries> {
    if let Some(g) = i.gens().iter().find(|g| !standard_homogeneous(g)) {
        return Err(AlgebraError::NotHomogeneous(g.to_string()));
    }
    Ok(HilbertSeries::of_monomial_ideal(&leading(i)?, i.ring().nvars()))
}

/// `λ(R/I)`, the number of standard monomials.
pub fn colength<F: Field>(i: &Ideal<F>) -> Result<u64> {
    let lead = leading(i)?;
    let n = i.ring().nvars();
    if lead.iter().any(|m| m.is_one()) {
        return Ok(0);
    }
    for v in 0..n {
        if !lead.iter().any(|m| m.exp(v) > 0 && m.degree() == m.exp(v) as u32) {
            return Err(AlgebraError::NonZeroDimensional);
        }
    }
    let hs = HilbertSeries::of_monomial_ideal(&lead, n);
    let (dim, deg) = hs.dim_and_degree();
    debug_assert!(dim == 0 || deg == 0);
    Ok(deg as u64)
}

/// `λ(K/I)` for `I ⊆ K`.
pub fn length_between<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<u64> {
    if !k.contains_ideal(i)? {
        return Err(AlgebraError::Containment(format!("{i} is not contained in {k}")));
    }
    Ok(colength(i)? - colength(k)?)
}

/// Dimensions of the graded pieces of `R/I` in degrees `0..=up_to`, trailing
/// zeros removed.
pub fn hilbert_function<F: Field>(i: &Ideal<F>, up_to: u32) -> Result<HVector> {
    let hs = hilbert_series(i)?;
    let mut v: Vec<u64> = (0..=up_to).map(|k| hs.coefficient(k) as u64).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    Ok(HVector(v))
}

/// Hilbert function of an Artinian quotient in full.
pub fn h_vector<F: Field>(i: &Ideal<F>) -> Result<HVector> {
    let total = colength(i)?;
    let mut v = Vec::new();
    let hs = hilbert_series(i)?;
    let mut acc = 0u64;
    let mut k = 0;
    while acc < total {
        let c = hs.coefficient(k) as u64;
        v.push(c);
        acc += c;
        k += 1;
    }
    Ok(HVector(v))
}

/// `(dim, deg)` of `R/I` for the standard grading.
pub fn dim_and_degree<F: Field>(i: &Ideal<F>) -> Result<(usize, u64)> {
    let (d, e) = hilbert_series(i)?.dim_and_degree();
    Ok((d, e as u64))
}

/// Bigraded series of `B/I` with `x` of bidegree (1,0) and `T` of bidegree (0,1).
pub fn bigraded_series<F: Field>(i: &Ideal<F>) -> Result<BigradedSeries> {
    if !i.is_bihomogeneous() {
        return Err(AlgebraError::NotHomogeneous("ideal is not bihomogeneous".into()));
    }
    let nb = i.ring().nbase();
    let degs = BigradedSeries::standard_degrees(nb, i.ring().nvars() - nb);
    Ok(BigradedSeries::of_monomial_ideal(&leading(i)?, &degs))
}

/// Bigraded series of `B/I` for an arbitrary positive bigrading, which the
/// generators of `I` must respect.
pub fn graded_series<F: Field>(i: &Ideal<F>, degs: &[(u32, u32)]) -> Result<BigradedSeries> {
    let bideg = |m: &Monomial| {
        degs.iter().enumerate().fold((0u32, 0u32), |(a, b), (k, &(p, q))| {
            let e = m.exp(k) as u32;
            (a + e * p, b + e * q)
        })
    };
    for g in i.gens() {
        let first = bideg(&g.terms()[0].0);
        if g.terms().iter().any(|(m, _)| bideg(m) != first) {
            return Err(AlgebraError::NotHomogeneous(g.to_string()));
        }
    }
    Ok(BigradedSeries::of_monomial_ideal(&leading(i)?, degs))
}
