//! Hilbert–Samuel coefficients from values of `j ↦ λ(R/I^j)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, colength};
use crate::arith::Field;
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;

/// Coefficients `e_0..e_d` of `P(j) = Σ (-1)^i e_i C(j+d-1-i, d-i)` together
/// with the sample points they were fitted on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsFit {
    pub coefficients: Vec<i64>,
    pub samples: Vec<(u32, u64)>,
}

impl HsFit {
    pub fn e0(&self) -> i64 {
        self.coefficients[0]
    }

    pub fn e1(&self) -> i64 {
        self.coefficients.get(1).copied().unwrap_or(0)
    }

    pub fn eval(&self, j: u32) -> i128 {
        let d = self.coefficients.len() as i128 - 1;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * e as i128 * binomial(j as i128 + d - 1 - i as i128, d - i as i128)
            })
            .sum()
    }
}

/// Fits the degree-`d` Hilbert–Samuel polynomial through the first `d+1`
/// samples and checks it against every remaining sample.
pub fn fit_hilbert_samuel(d: usize, samples: &[(u32, u64)]) -> Result<HsFit> {
    if samples.len() < d + 1 {
        return Err(AlgebraError::Precondition(format!("need {} samples, got {}", d + 1, samples.len())));
    }
    let n = d + 1;
    let mut m: Vec<Vec<BigRational>> = samples[..n]
        .iter()
        .map(|&(j, v)| {
            let mut row: Vec<BigRational> = (0..=d)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let b = binomial(j as i128 + d as i128 - 1 - i as i128, (d - i) as i128);
                    BigRational::from_integer(BigInt::from(sign * b))
                })
                .collect();
            row.push(BigRational::from_integer(BigInt::from(v)));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).ok_or_else(|| {
            AlgebraError::Internal("singular Hilbert–Samuel interpolation system".into())
        })?;
        m.swap(c, p);
        let inv = BigRational::one() / m[c][c].clone();
        for k in c..=n {
            m[c][k] = &m[c][k] * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=n {
                    let t = &f * &m[c][k];
                    m[r][k] = &m[r][k] - t;
                }
            }
        }
    }
    let mut coefficients = Vec::with_capacity(n);
    for row in &m {
        let v = &row[n];
        if !v.is_integer() {
            return Err(AlgebraError::HilbertFit(format!("non-integer coefficient {v}")));
        }
        let v = v.to_integer();
        coefficients.push(v.to_i64().ok_or_else(|| AlgebraError::Internal(format!("coefficient {} overflows", v.abs())))?);
    }
    let fit = HsFit {
        coefficients,
        samples: samples.to_vec(),
    };
    for &(j, v) in &samples[n..] {
        if fit.eval(j) != v as i128 {
            return Err(AlgebraError::HilbertFit(format!("polynomial misses λ(R/I^{j}) = {v}")));
        }
    }
    Ok(fit)
}

/// Samples `λ(R/I^j)` on `j = r+1 ..= r+d+2` through `value`, fits, and on a
/// verification failure retries once on the window shifted by `d+2`.
pub fn fit_window(
    d: usize,
    r: u32,
    mut value: impl FnMut(u32) -> Result<u64>,
) -> Result<HsFit> {
    let mut start = r + 1;
    let mut last_err = None;
    for _ in 0..2 {
        let samples = (start..start + d as u32 + 2)
            .map(|j| Ok((j, value(j)?)))
            .collect::<Result<Vec<_>>>()?;
        match fit_hilbert_samuel(d, &samples) {
            Ok(f) => return Ok(f),
            Err(e @ AlgebraError::HilbertFit(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        start += d as u32 + 2;
    }
    Err(last_err.expect("two attempts"))
}

/// `(e_0, e_1)` of `I` from colengths of its powers, given the reduction
/// number `r` of `I` with respect to `J`. Checks `e_0 = λ(R/J)`.
pub fn hs_coefficients<F: Field>(i: &Ideal<F>, j: &Ideal<F>, r: u32) -> Result<(i64, i64)> {
    let d = i.ring().nvars();
    let mut pow = i.power(r + 1)?;
    let mut at = r + 1;
    let fit = fit_window(d, r, |k| {
        while at < k {
            pow = pow.product(i)?;
            at += 1;
        }
        colength(&pow)
    })?;
    let lj = colength(j)? as i64;
    if fit.e0() != lj {
        return Err(AlgebraError::Internal(format!(
            "multiplicity {} differs from λ(R/J) = {lj}",
            fit.e0()
        )));
    }
    Ok((fit.e0(), fit.e1()))
}
