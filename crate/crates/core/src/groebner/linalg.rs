//! Dense row reduction over a field, for spans of polynomials.

use std::collections::HashMap;

use crate::arith::{Field, Monomial, Polynomial};

/// Row-echelon form of a set of polynomials viewed as coefficient vectors.
pub(crate) struct Echelon<F: Field> {
    field: F,
    index: HashMap<Monomial, usize>,
    monomials: Vec<Monomial>,
    pivots: Vec<Option<usize>>,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Self {
            field,
            index: HashMap::new(),
            monomials: Vec::new(),
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn column(&mut self, m: Monomial) -> usize {
        if let Some(&c) = self.index.get(&m) {
            return c;
        }
        let c = self.monomials.len();
        self.monomials.push(m);
        self.index.insert(m, c);
        self.pivots.push(None);
        for r in &mut self.rows {
            r.push(self.field.zero());
        }
        c
    }

    fn dense(&mut self, p: &Polynomial<F>) -> Vec<F::Elem> {
        let cols: Vec<usize> = p.terms().iter().map(|(m, _)| self.column(*m)).collect();
        let mut v = vec![self.field.zero(); self.monomials.len()];
        for (c, (_, e)) in cols.into_iter().zip(p.terms()) {
            v[c] = e.clone();
        }
        v
    }

    fn reduce(&self, v: &mut [F::Elem]) {
        for c in 0..v.len() {
            if self.field.is_zero(&v[c]) {
                continue;
            }
            if let Some(r) = self.pivots[c] {
                let coeff = v[c].clone();
                let row = &self.rows[r];
                for (k, x) in row.iter().enumerate().skip(c) {
                    if !self.field.is_zero(x) {
                        v[k] = self.field.sub(&v[k], &self.field.mul(&coeff, x));
                    }
                }
            }
        }
    }

    /// Adds `p` to the span; returns whether the rank grew.
    pub fn insert(&mut self, p: &Polynomial<F>) -> bool {
        let mut v = self.dense(p);
        self.reduce(&mut v);
        match v.iter().position(|x| !self.field.is_zero(x)) {
            None => false,
            Some(c) => {
                let inv = self.field.inv(&v[c]);
                for x in v.iter_mut() {
                    if !self.field.is_zero(x) {
                        *x = self.field.mul(x, &inv);
                    }
                }
                self.pivots[c] = Some(self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }
}
