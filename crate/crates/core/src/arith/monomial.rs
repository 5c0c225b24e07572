//! Packed exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Hard limit on ring size. Presentation rings of the families handled here
/// need at most 4 + 5 + 1 variables; elimination tricks add a few more.
pub const MAX_VARS: usize = 16;

/// An exponent vector with 16-bit entries and a cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len(), MAX_VARS));
        }
        let mut m = Self::ONE;
        for (i, &e) in exps.iter().enumerate() {
            if e > u16::MAX as u32 {
                return Err(AlgebraError::ExponentOverflow(e));
            }
            m.exps[i] = e as u16;
            m.deg += e;
        }
        Ok(m)
    }

    pub fn var(i: usize, e: u16) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    /// Total (unweighted) degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, weights: &[u16]) -> u32 {
        weights
            .iter()
            .zip(self.exps.iter())
            .map(|(&w, &e)| w as u32 * e as u32)
            .sum()
    }

    /// Degree in the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Self::ONE;
        let mut overflow = false;
        for i in 0..MAX_VARS {
            let s = self.exps[i] as u32 + other.exps[i] as u32;
            overflow |= s > u16::MAX as u32;
            out.exps[i] = s as u16;
        }
        if overflow {
            let worst = (0..MAX_VARS)
                .map(|i| self.exps[i] as u32 + other.exps[i] as u32)
                .max()
                .unwrap_or(0);
            return Err(AlgebraError::ExponentOverflow(worst));
        }
        out.deg = self.deg + other.deg;
        Ok(out)
    }

    /// Product without the overflow check; callers guarantee small exponents.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].wrapping_add(other.exps[i]);
        }
        out.deg = self.deg + other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = other.exps[i] - self.exps[i];
        }
        out.deg = other.deg - self.deg;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(other.exps[i]);
            out.exps[i] = e;
            deg += e as u32;
        }
        out.deg = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = self.exps[i].min(other.exps[i]);
            out.exps[i] = e;
            deg += e as u32;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Copy with the exponent of variable `i` replaced.
    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }

    /// Bit signature for fast non-divisibility rejection: bit `i` is set when
    /// variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for i in 0..MAX_VARS {
            if self.exps[i] != 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Only the first `n` exponents are meaningful for an `n`-variable ring.
    pub fn to_vec(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    /// Rearrange exponents: new position `perm[i]` receives old exponent `i`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Self::ONE;
        for (i, &j) in perm.iter().enumerate() {
            out.exps[j] = self.exps[i];
        }
        out.deg = self.deg;
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// The shape of a monomial order. All orders use the ring grading (weights)
/// wherever a degree is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Product order: weighted grevlex on variables `0..front`, ties broken
    /// by weighted grevlex on the rest. Eliminates the front block.
    Elimination { front: usize },
    /// Unweighted degree in variables `t_start..` first, then weighted grevlex.
    TDegreeFirst { t_start: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    nvars: usize,
    weights: [u16; MAX_VARS],
    unit: bool,
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.kind, self.nvars)
    }
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, weights: &[u16]) -> Self {
        assert!(weights.len() <= MAX_VARS);
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut w = [1u16; MAX_VARS];
        w[..weights.len()].copy_from_slice(weights);
        Self {
            kind,
            nvars: weights.len(),
            weights: w,
            unit: weights.iter().all(|&x| x == 1),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[u16] {
        &self.weights[..self.nvars]
    }

    #[inline]
    pub fn degree(&self, m: &Monomial) -> u32 {
        if self.unit {
            m.deg
        } else {
            m.weighted_degree(&self.weights[..self.nvars])
        }
    }

    #[inline]
    fn block_degree(&self, m: &Monomial, lo: usize, hi: usize) -> u32 {
        let mut d = 0u32;
        for i in lo..hi {
            d += self.weights[i] as u32 * m.exps[i] as u32;
        }
        d
    }

    #[inline]
    fn revlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in (lo..hi).rev() {
            if a.exps[i] != b.exps[i] {
                return b.exps[i].cmp(&a.exps[i]);
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::GrevLex => self
                .degree(a)
                .cmp(&self.degree(b))
                .then_with(|| Self::revlex(a, b, 0, self.nvars)),
            OrderKind::Lex => a.exps[..self.nvars].cmp(&b.exps[..self.nvars]),
            OrderKind::Elimination { front } => {
                let n = self.nvars;
                self.block_degree(a, 0, front)
                    .cmp(&self.block_degree(b, 0, front))
                    .then_with(|| Self::revlex(a, b, 0, front))
                    .then_with(|| {
                        self.block_degree(a, front, n)
                            .cmp(&self.block_degree(b, front, n))
                    })
                    .then_with(|| Self::revlex(a, b, front, n))
            }
            OrderKind::TDegreeFirst { t_start } => a
                .partial_degree(t_start..self.nvars)
                .cmp(&b.partial_degree(t_start..self.nvars))
                .then_with(|| self.degree(a).cmp(&self.degree(b)))
                .then_with(|| Self::revlex(a, b, 0, self.nvars)),
        }
    }

    /// True when comparing total weighted degree first, so homogeneous
    /// inputs keep their degree structure through reduction.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.kind, OrderKind::GrevLex)
    }
}
