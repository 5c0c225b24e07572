
use super::engine::{normal_form, Engine, GbStats};
use crate::arith::{Field, Monomial, MonomialOrder, Polynomial, RingRef, Term};
use crate::error::{AlgebraError, Result};

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial.
#[derive(Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    order: MonomialOrder,
    elements: Vec<Vec<Term<F>>>,
    stats: GbStats,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.polys().iter().map(|p| p.to_string())).finish()
    }
}

fn prepare<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>], order: MonomialOrder) -> Result<Vec<Vec<Term<F>>>> {
    gens.iter()
        .map(|g| {
            if !g.ring().same_as(ring) {
                return Err(AlgebraError::RingMismatch);
            }
            Ok(g.with_order(order).into_terms())
        })
        .collect()
}

impl<F: Field> GroebnerBasis<F> {
    /// Buchberger's algorithm under `order`, subject to the ring's limits.
    pub fn compute(ring: &RingRef<F>, gens: &[Polynomial<F>], order: MonomialOrder) -> Result<Self> {
        Self::compute_truncated(ring, gens, order, None)
    }

    /// As `compute`, ignoring all work of sugar above `bound`. For
    /// homogeneous input the result agrees with the full basis up to that degree.
    pub fn compute_truncated(
        ring: &RingRef<F>,
        gens: &[Polynomial<F>],
        order: MonomialOrder,
        bound: Option<u32>,
    ) -> Result<Self> {
        let terms = prepare(ring, gens, order)?;
        let out = Engine::new(ring.field(), order, ring.weights(), ring.limits())
            .with_degree_bound(bound)
            .run(&terms)?;
        Ok(Self {
            ring: ring.clone(),
            order,
            elements: out.basis,
            stats: out.stats,
        })
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn polys(&self) -> Vec<Polynomial<F>> {
        self.elements
            .iter()
            .map(|t| Polynomial::from_sorted(&self.ring, self.order, t.clone()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|t| t[0].0).collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0][0].0.is_one()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !f.ring().same_as(&self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let f = f.with_order(self.order);
        let r = normal_form(self.ring.field(), self.order, &self.elements, f.terms())?;
        Ok(Polynomial::from_sorted(&self.ring, self.order, r))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks the Gröbner property directly: every S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<bool> {
        let field = self.ring.field();
        let minus = field.neg(&field.one());
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                if a[0].0.is_coprime(&b[0].0) {
                    continue;
                }
                let l = a[0].0.lcm(&b[0].0);
                let sa = Polynomial::from_sorted(&self.ring, self.order, a.clone())
                    .mul_monomial(&a[0].0.quotient_of(&l))?;
                let sb = Polynomial::from_sorted(&self.ring, self.order, b.clone())
                    .mul_monomial(&b[0].0.quotient_of(&l))?
                    .scale(&minus);
                let s = sa.try_add(&sb)?;
                if !self.contains(&s)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Elements whose support avoids the given variables.
    pub fn free_of(&self, vars: &[usize]) -> Vec<Polynomial<F>> {
        self.elements
            .iter()
            .filter(|t| t.iter().all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0)))
            .map(|t| Polynomial::from_sorted(&self.ring, self.order, t.clone()))
            .collect()
    }
}

/// Indices of a minimal generating subset of homogeneous `gens`, taken in
/// ascending degree with ties in list order.
pub fn minimal_generator_indices<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> Result<Vec<usize>> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(g.to_string()));
        }
    }
    let order = ring.grevlex();
    let terms = prepare(ring, gens, order)?;
    let out = Engine::new(ring.field(), order, ring.weights(), ring.limits()).run(&terms)?;
    let mut kept = out.kept_generators;
    kept.sort_by(|&a, &b| {
        let (da, db) = (gens[a].degree(), gens[b].degree());
        da.cmp(&db).then(a.cmp(&b))
    });
    Ok(kept)
}

