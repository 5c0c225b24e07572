//! Hilbert series of monomial ideals by pivot splitting.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::Monomial;

type Numerator2 = HashMap<(u32, u32), i128>;

/// Drops generators divisible by another generator; sorts by degree.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m.exponents()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        let mask = g.support_mask();
        if !out.iter().any(|h| h.support_mask() & !mask == 0 && h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn mul_binomial(num: &Numerator2, shift: (u32, u32)) -> Numerator2 {
    // num * (1 - s^shift)
    let mut out = num.clone();
    for (&(a, b), &c) in num {
        *out.entry((a + shift.0, b + shift.1)).or_insert(0) -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_shifted(acc: &mut Numerator2, num: &Numerator2, shift: (u32, u32)) {
    for (&(a, b), &c) in num {
        *acc.entry((a + shift.0, b + shift.1)).or_insert(0) += c;
    }
}

/// Numerator of the Hilbert series of `k[vars]/(gens)` where variable `i`
/// has bidegree `degs[i]`.
pub(crate) fn numerator2(gens: &[Monomial], degs: &[(u32, u32)]) -> HashMap<(u32, u32), i128> {
    let bideg = |m: &Monomial| {
        degs.iter().enumerate().fold((0, 0), |(a, b), (i, &(p, q))| {
            let e = m.exp(i) as u32;
            (a + e * p, b + e * q)
        })
    };
    let mut out = recurse(minimalize(gens.to_vec()), &bideg);
    out.retain(|_, c| *c != 0);
    out
}

fn recurse(gens: Vec<Monomial>, bideg: &dyn Fn(&Monomial) -> (u32, u32)) -> Numerator2 {
    let mut one = Numerator2::new();
    one.insert((0, 0), 1);
    if gens.is_empty() {
        return one;
    }
    // Split off generators coprime to all others; they contribute a factor.
    let mut counts = [0u32; crate::arith::MAX_VARS];
    for g in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let shared = counts.iter().enumerate().filter(|(_, &c)| c >= 2).max_by_key(|(i, &c)| (c, usize::MAX - i));
    let Some((v, _)) = shared.map(|(i, &c)| (i, c)) else {
        let mut acc = one;
        for g in &gens {
            acc = mul_binomial(&acc, bideg(g));
        }
        return acc;
    };
    let (coprime, rest): (Vec<Monomial>, Vec<Monomial>) = gens.into_iter().partition(|g| {
        let mask = g.support_mask();
        (0..crate::arith::MAX_VARS).all(|i| mask & (1 << i) == 0 || counts[i] == 1)
    });
    if !coprime.is_empty() {
        let mut acc = recurse(rest, bideg);
        for g in &coprime {
            acc = mul_binomial(&acc, bideg(g));
        }
        return acc;
    }
    let gens = rest;
    let e = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).min().expect("shared variable");
    let pivot = Monomial::var(v, e);
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> = gens.iter().map(|g| g.with_exp(v, g.exp(v).saturating_sub(e))).collect();
    let mut acc = recurse(minimalize(with_pivot), bideg);
    let q = recurse(minimalize(quotient), bideg);
    add_shifted(&mut acc, &q, bideg(&pivot));
    acc
}

/// `Σ_k h_k t^k / (1 - t)^N` for the standard grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    nvars: usize,
}

impl HilbertSeries {
    /// Series of `k[v_1..v_N]/(gens)` with every variable of degree one.
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> Self {
        let num = numerator2(gens, &vec![(1, 0); nvars]);
        let top = num.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let mut numerator = vec![0i128; top + 1];
        for ((a, _), c) in num {
            numerator[a as usize] += c;
        }
        Self::new(numerator, nvars)
    }

    pub fn new(mut numerator: Vec<i128>, nvars: usize) -> Self {
        while numerator.len() > 1 && numerator.last() == Some(&0) {
            numerator.pop();
        }
        Self { numerator, nvars }
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient of `t^k` in the expanded series.
    pub fn coefficient(&self, k: u32) -> i128 {
        let n = self.nvars as i128;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| *i as u32 <= k)
            .map(|(i, &c)| c * free_count(k as i128 - i as i128, n))
            .sum()
    }

    /// Krull dimension and multiplicity: the series is `h(t)/(1-t)^dim` with `h(1) ≠ 0`.
    pub fn dim_and_degree(&self) -> (usize, i128) {
        let mut h = self.numerator.clone();
        if h.iter().all(|&c| c == 0) {
            return (0, 0);
        }
        let mut dim = self.nvars;
        while dim > 0 && h.iter().sum::<i128>() == 0 {
            // divide by (1 - t)
            let mut q = vec![0i128; h.len() - 1];
            let mut acc = 0;
            for i in 0..h.len() - 1 {
                acc += h[i];
                q[i] = acc;
            }
            h = q;
            dim -= 1;
        }
        (dim, h.iter().sum())
    }
}

/// Bigraded Hilbert series `N(s,t) / Π (1 - s^{p_i} t^{q_i})` where
/// variable `i` has bidegree `(p_i, q_i)`, all with `p_i + q_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedSeries {
    numerator: HashMap<(u32, u32), i128>,
    degs: Vec<(u32, u32)>,
}

impl BigradedSeries {
    pub fn of_monomial_ideal(gens: &[Monomial], degs: &[(u32, u32)]) -> Self {
        Self {
            numerator: numerator2(gens, degs),
            degs: degs.to_vec(),
        }
    }

    /// The grading with the first `nx` variables in bidegree (1,0) and the
    /// remaining `nt` in bidegree (0,1).
    pub fn standard_degrees(nx: usize, nt: usize) -> Vec<(u32, u32)> {
        let mut d = vec![(1, 0); nx];
        d.extend(std::iter::repeat_n((0, 1), nt));
        d
    }

    /// Dimensions of all components of bidegree `(a, j)` with `a <= amax`,
    /// `j <= jmax`, indexed `[j][a]`.
    pub fn table(&self, amax: u32, jmax: u32) -> Vec<Vec<i128>> {
        let (am, jm) = (amax as usize, jmax as usize);
        // Monomial counts of the free ring.
        let mut free = vec![vec![0i128; am + 1]; jm + 1];
        free[0][0] = 1;
        for &(p, q) in &self.degs {
            let (p, q) = (p as usize, q as usize);
            for j in 0..=jm {
                for a in 0..=am {
                    if (p, q) != (0, 0) && j >= q && a >= p {
                        let prev = free[j - q][a - p];
                        free[j][a] += prev;
                    }
                }
            }
        }
        let mut out = vec![vec![0i128; am + 1]; jm + 1];
        for (&(p, q), &c) in &self.numerator {
            let (p, q) = (p as usize, q as usize);
            if p > am || q > jm {
                continue;
            }
            for j in q..=jm {
                for a in p..=am {
                    out[j][a] += c * free[j - q][a - p];
                }
            }
        }
        out
    }

    /// Dimension of the component of bidegree `(a, j)`.
    pub fn coefficient(&self, a: u32, j: u32) -> i128 {
        self.table(a, j)[j as usize][a as usize]
    }
}

/// Number of monomials of degree `d` in `n` variables.
fn free_count(d: i128, n: i128) -> i128 {
    if n == 0 {
        return (d == 0) as i128;
    }
    binomial(d + n - 1, n - 1)
}

pub(crate) fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
