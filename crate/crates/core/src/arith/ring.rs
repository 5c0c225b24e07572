//! Ring contexts: coefficient field, variable names, grading, and resource limits.

use std::sync::Arc;
use std::time::Duration;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
use super::poly::Polynomial;
use crate::error::{AlgebraError, Result};

/// Budget applied to every Groebner basis computation in a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    /// Maximum number of S-pair and generator reductions.
    pub max_reductions: u64,
    pub timeout: Option<Duration>,
}

impl Default for GbLimits {
    fn default() -> Self {
        Self {
            max_reductions: 2_000_000,
            timeout: None,
        }
    }
}

/// A polynomial ring `k[v_0, ..., v_{n-1}]` with a positive grading.
///
/// The first `nbase` variables are the base variables (`x`); the rest are
/// presentation variables (`T`). Bidegrees split along that boundary.
#[derive(Debug)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
    weights: Vec<u16>,
    nbase: usize,
    limits: GbLimits,
}

pub type RingRef<F> = Arc<Ring<F>>;

impl<F: Field> Ring<F> {
    /// Standard-graded ring, all variables base variables.
    pub fn new<S: AsRef<str>>(field: F, names: &[S]) -> Result<RingRef<F>> {
        let n = names.len();
        Self::with_grading(field, names, &vec![1; n], n, GbLimits::default())
    }

    pub fn with_grading<S: AsRef<str>>(
        field: F,
        names: &[S],
        weights: &[u16],
        nbase: usize,
        limits: GbLimits,
    ) -> Result<RingRef<F>> {
        if names.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(names.len(), MAX_VARS));
        }
        if weights.len() != names.len() || weights.contains(&0) || nbase > names.len() {
            return Err(AlgebraError::Precondition(
                "grading must assign a positive weight to every variable".into(),
            ));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if !is_identifier(a) {
                return Err(AlgebraError::Precondition(format!(
                    "{a:?} is not a valid variable name"
                )));
            }
            if names[..i].contains(a) {
                return Err(AlgebraError::Precondition(format!("duplicate variable {a}")));
            }
        }
        Ok(Arc::new(Self {
            field,
            names,
            weights: weights.to_vec(),
            nbase,
            limits,
        }))
    }

    /// Same variables and grading under different limits.
    pub fn with_limits(&self, limits: GbLimits) -> RingRef<F> {
        Arc::new(Self {
            field: self.field.clone(),
            names: self.names.clone(),
            weights: self.weights.clone(),
            nbase: self.nbase,
            limits,
        })
    }

    /// A ring over the same field with the same limits and new variables.
    pub fn derived<S: AsRef<str>>(&self, names: &[S], weights: &[u16], nbase: usize) -> Result<RingRef<F>> {
        Self::with_grading(self.field.clone(), names, weights, nbase, self.limits)
    }

    /// `count` distinct names built from `stem` that this ring does not use.
    pub fn fresh_names(&self, stem: &str, count: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(count);
        let mut k = 0;
        while out.len() < count {
            let cand = if k == 0 && count == 1 { stem.to_string() } else { format!("{stem}{k}") };
            if self.var_index(&cand).is_none() {
                out.push(cand);
            }
            k += 1;
        }
        out
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn weights(&self) -> &[u16] {
        &self.weights
    }
    pub fn nbase(&self) -> usize {
        self.nbase
    }
    pub fn limits(&self) -> GbLimits {
        self.limits
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn order(&self, kind: OrderKind) -> MonomialOrder {
        MonomialOrder::new(kind, &self.weights)
    }

    pub fn grevlex(&self) -> MonomialOrder {
        self.order(OrderKind::GrevLex)
    }

    /// Structural equality: same field, names, and grading.
    pub fn same_as(&self, other: &Ring<F>) -> bool {
        std::ptr::eq(self, other)
            || (self.field.characteristic() == other.field.characteristic()
                && self.names == other.names
                && self.weights == other.weights
                && self.nbase == other.nbase)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }

    /// `(x-degree, T-degree)` split at `nbase`.
    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        (
            m.partial_degree(0..self.nbase),
            m.partial_degree(self.nbase..self.nvars()),
        )
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Constructors that need a shared handle to the ring.
pub trait RingExt<F: Field> {
    fn zero(&self) -> Polynomial<F>;
    fn one(&self) -> Polynomial<F>;
    fn constant(&self, c: F::Elem) -> Polynomial<F>;
    fn int(&self, c: i64) -> Polynomial<F>;
    fn var(&self, i: usize) -> Polynomial<F>;
    fn var_named(&self, name: &str) -> Result<Polynomial<F>>;
    fn monomial(&self, m: Monomial) -> Polynomial<F>;
    fn parse(&self, text: &str) -> Result<Polynomial<F>>;
    fn parse_list(&self, text: &str) -> Result<Vec<Polynomial<F>>>;
}

impl<F: Field> RingExt<F> for RingRef<F> {
    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self)
    }
    fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }
    fn constant(&self, c: F::Elem) -> Polynomial<F> {
        Polynomial::from_terms(self, vec![(Monomial::ONE, c)])
    }
    fn int(&self, c: i64) -> Polynomial<F> {
        self.constant(self.field.from_int(c))
    }
    fn var(&self, i: usize) -> Polynomial<F> {
        assert!(i < self.nvars(), "variable index out of range");
        self.monomial(Monomial::var(i, 1))
    }
    fn var_named(&self, name: &str) -> Result<Polynomial<F>> {
        let i = self
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(self.var(i))
    }
    fn monomial(&self, m: Monomial) -> Polynomial<F> {
        Polynomial::from_terms(self, vec![(m, self.field.one())])
    }
    fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        super::parse::parse_polynomial(self, text)
    }
    fn parse_list(&self, text: &str) -> Result<Vec<Polynomial<F>>> {
        super::parse::parse_polynomial_list(self, text)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
