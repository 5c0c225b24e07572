//! Geobuckets for polynomial reduction.
//!
//! Each bucket holds a term list sorted ascending, so the leading term sits
//! at the end and can be popped in O(1). Bucket `i` holds at most `4^(i+1)`
//! terms; overflowing buckets merge upward.

use std::cmp::Ordering;

use crate::arith::{Field, Monomial, MonomialOrder, Term};
use crate::error::Result;

pub(crate) struct GeoBucket<'a, F: Field> {
    field: &'a F,
    order: MonomialOrder,
    buckets: Vec<Vec<Term<F>>>,
}

fn capacity(i: usize) -> usize {
    4usize << (2 * i)
}

impl<'a, F: Field> GeoBucket<'a, F> {
    pub fn new(field: &'a F, order: MonomialOrder) -> Self {
        Self {
            field,
            order,
            buckets: Vec::new(),
        }
    }

    /// Adds a term list given in ascending order.
    fn add_ascending(&mut self, mut terms: Vec<Term<F>>) {
        let mut i = 0;
        while capacity(i) < terms.len() {
            i += 1;
        }
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[i]);
            if !existing.is_empty() {
                terms = merge_ascending(self.field, self.order, existing, terms);
            }
            if terms.len() <= capacity(i) {
                self.buckets[i] = terms;
                return;
            }
            i += 1;
        }
    }

    /// Adds `coeff * shift * poly` where `poly` is sorted descending.
    pub fn add_scaled(&mut self, poly: &[Term<F>], shift: &Monomial, coeff: &F::Elem) -> Result<()> {
        if poly.is_empty() || self.field.is_zero(coeff) {
            return Ok(());
        }
        let mut terms = Vec::with_capacity(poly.len());
        let one = self.field.is_one(coeff);
        for (m, c) in poly.iter().rev() {
            let c = if one { c.clone() } else { self.field.mul(c, coeff) };
            terms.push((m.checked_mul(shift)?, c));
        }
        self.add_ascending(terms);
        Ok(())
    }

    /// Adds a descending term list unchanged.
    pub fn add_descending(&mut self, poly: &[Term<F>]) {
        if poly.is_empty() {
            return;
        }
        self.add_ascending(poly.iter().rev().cloned().collect());
    }

    /// Removes and returns the leading term, combining equal heads.
    pub fn pop_leading(&mut self) -> Option<Term<F>> {
        loop {
            let mut best: Option<(usize, Monomial)> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                if let Some((m, _)) = b.last() {
                    match &best {
                        Some((_, bm)) if self.order.cmp(m, bm) != Ordering::Greater => {}
                        _ => best = Some((i, *m)),
                    }
                }
            }
            let (_, lead) = best?;
            let mut coeff = self.field.zero();
            for b in self.buckets.iter_mut() {
                if let Some((m, _)) = b.last() {
                    if *m == lead {
                        let (_, c) = b.pop().unwrap();
                        coeff = self.field.add(&coeff, &c);
                    }
                }
            }
            if !self.field.is_zero(&coeff) {
                return Some((lead, coeff));
            }
        }
    }
}

fn merge_ascending<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: Vec<Term<F>>,
    b: Vec<Term<F>>,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (m, c1) = ia.next().unwrap();
                let (_, c2) = ib.next().unwrap();
                let c = field.add(&c1, &c2);
                if !field.is_zero(&c) {
                    out.push((m, c));
                }
            }
        }
    }
    out
}
