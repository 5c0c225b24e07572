//! Sparse multivariate polynomials with terms kept in descending order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::ring::{RingExt, RingRef};
use crate::error::{AlgebraError, Result};

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// A polynomial bound to a ring, with terms sorted strictly descending
/// under `order`, no zero coefficients and no repeated monomials.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    order: MonomialOrder,
    terms: Vec<Term<F>>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Self {
            ring: ring.clone(),
            order: ring.grevlex(),
            terms: Vec::new(),
        }
    }

    /// Canonicalizes an arbitrary term list under the ring's grevlex order.
    pub fn from_terms(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        Self::from_terms_ordered(ring, ring.grevlex(), terms)
    }

    pub fn from_terms_ordered(ring: &RingRef<F>, order: MonomialOrder, terms: Vec<Term<F>>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<F>> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    /// Caller guarantees canonical form under `order`.
    pub(crate) fn from_sorted(ring: &RingRef<F>, order: MonomialOrder, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field().is_zero(c)));
        Self {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }
    pub fn field(&self) -> &F {
        self.ring.field()
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }
    pub(crate) fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Self {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    /// Maximal term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(F::Elem, Monomial)> {
        if order == self.order {
            let (m, c) = self.terms.first().ok_or(AlgebraError::ZeroPolynomial)?;
            return Ok((c.clone(), *m));
        }
        let (m, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .ok_or(AlgebraError::ZeroPolynomial)?;
        Ok((c.clone(), *m))
    }

    /// Leading monomial under the polynomial's own order. Panics on zero.
    pub fn lm(&self) -> Monomial {
        self.terms[0].0
    }

    pub fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.field().is_one(self.lc()) {
            return self.clone();
        }
        let inv = self.field().inv(self.lc());
        self.scale(&inv)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self {
                terms: Vec::new(),
                ..self.clone()
            };
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect();
        Self::from_sorted(&self.ring, self.order, terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.checked_mul(m)?, c.clone()));
        }
        Ok(Self::from_sorted(&self.ring, self.order, terms))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        Ok(Self::from_sorted(
            &self.ring,
            self.order,
            merge_add(self.field(), self.order, &self.terms, &other.terms, None),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        let minus_one = self.field().neg(&self.field().one());
        Ok(Self::from_sorted(
            &self.ring,
            self.order,
            merge_add(self.field(), self.order, &self.terms, &other.terms, Some(&minus_one)),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero_like(self));
        }
        let field = self.field();
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_monomial(m)?.scale(c));
        }
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let p = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<Term<F>> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let order = self.order;
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Self::from_sorted(&self.ring, order, terms))
    }

    pub fn try_pow(&self, e: u32) -> Result<Self> {
        let mut acc = self.ring.one().with_order(self.order);
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    fn zero_like(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            order: self.order,
            terms: Vec::new(),
        }
    }

    /// Largest weighted degree of a term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.weighted_degree(m))
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.weighted_degree(m))
            .min()
            .unwrap_or(0)
    }

    /// Homogeneous with respect to the ring grading.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ring.weighted_degree(m0);
                self.terms.iter().all(|(m, _)| self.ring.weighted_degree(m) == d)
            }
        }
    }

    /// Common `(x-degree, T-degree)` of all terms, if there is one.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let b0 = self.ring.bidegree(&self.terms.first()?.0);
        self.terms
            .iter()
            .all(|(m, _)| self.ring.bidegree(m) == b0)
            .then_some(b0)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// Largest T-degree among the terms.
    pub fn t_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.bidegree(m).1)
            .max()
            .unwrap_or(0)
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            mask |= m.support_mask();
        }
        (0..self.ring.nvars()).filter(|i| mask & (1 << i) != 0).collect()
    }

    /// Image under the ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() < self.ring.nvars() {
            let missing = &self.ring.names()[images.len()];
            return Err(AlgebraError::UnmappedVariable(missing.clone()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        for img in images {
            if !img.ring.same_as(&target) {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let mut power_cache: HashMap<(usize, u16), Polynomial<F>> = HashMap::new();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        let field = target.field();
        for (m, c) in &self.terms {
            let mut prod = target.constant(c.clone());
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let p = match power_cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = images[i].try_pow(e as u32)?;
                        power_cache.insert((i, e), p.clone());
                        p
                    }
                };
                prod = prod.try_mul(&p)?;
                if prod.is_zero() {
                    break;
                }
            }
            for (tm, tc) in prod.terms {
                match acc.get_mut(&tm) {
                    Some(v) => *v = field.add(v, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(
            &target,
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect(),
        ))
    }

    /// Substitution keyed by variable name; every ring variable must be mapped.
    pub fn substitute_named(
        &self,
        map: &HashMap<String, Polynomial<F>>,
    ) -> Result<Polynomial<F>> {
        let images = self
            .ring
            .names()
            .iter()
            .map(|n| {
                map.get(n)
                    .cloned()
                    .ok_or_else(|| AlgebraError::UnmappedVariable(n.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute(&images)
    }

    /// Renames variables into `target`: variable `i` becomes `var_map[i]`.
    /// The map must be injective on the support.
    pub fn map_vars(&self, target: &RingRef<F>, var_map: &[usize]) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::ONE;
                for i in 0..self.ring.nvars() {
                    if m.exp(i) > 0 {
                        out = out.mul(&Monomial::var(var_map[i], m.exp(i)));
                    }
                }
                (out, c.clone())
            })
            .collect();
        Polynomial::from_terms_ordered(target, target.grevlex(), terms)
    }

    /// Exact quotient `self / divisor`; errors when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let divisor = divisor.with_order(self.order);
        let field = self.field().clone();
        let (dm, dc) = (divisor.terms[0].0, field.inv(&divisor.terms[0].1));
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !dm.divides(&m) {
                return Err(AlgebraError::Precondition(
                    "polynomial division leaves a remainder".into(),
                ));
            }
            let q = dm.quotient_of(&m);
            let qc = field.mul(&c, &dc);
            let step = divisor.mul_monomial(&q)?.scale(&qc);
            rem = rem.try_sub(&step)?;
            quot.push((q, qc));
        }
        Ok(Polynomial::from_terms_ordered(&self.ring, self.order, quot))
    }

    /// Sets the listed variables to zero.
    pub fn kill_vars(&self, vars: &[usize]) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
            .cloned()
            .collect();
        Self::from_sorted(&self.ring, self.order, terms)
    }

    /// Component of the given weighted degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.weighted_degree(m) == d)
            .cloned()
            .collect();
        Self::from_sorted(&self.ring, self.order, terms)
    }
}

/// `a + s*b` for sorted term lists (`s = 1` when `None`).
pub(crate) fn merge_add<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: &[Term<F>],
    b: &[Term<F>],
    s: Option<&F::Elem>,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |c: &F::Elem| match s {
        Some(s) => field.mul(c, s),
        None => c.clone(),
    };
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, scaled(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &scaled(&b[j].1));
                if !field.is_zero(&c) {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, scaled(c))));
    out
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_as(&other.ring) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut coeff = field.format(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono = self.ring.format_monomial(m);
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let minus_one = self.field().neg(&self.field().one());
        self.scale(&minus_one)
    }
}

