//! First syzygies of homogeneous forms.
//!
//! The module `R^{1+m}` is encoded inside `R[e_0, e_1, .., e_m]` as the
//! forms of degree one in the `e` variables, with all `e`-quadrics added to
//! the ideal. The submodule spanned by `f_i e_0 + e_i` meets the `e_0`-free
//! part exactly in the syzygy module, which elimination of `e_0` exposes.

use super::basis::{minimal_generator_indices, GroebnerBasis};
use super::ideal::Ideal;
use crate::arith::{Field, Monomial, OrderKind, Polynomial, RingExt, RingRef, MAX_VARS};
use crate::error::{AlgebraError, Result};

/// Columns minimally generating the syzygies of `(f_1, .., f_m)`.
#[derive(Clone, Debug)]
pub struct SyzygyMatrix<F: Field> {
    ring: RingRef<F>,
    forms: Vec<Polynomial<F>>,
    columns: Vec<Vec<Polynomial<F>>>,
    degrees: Vec<u32>,
}

impl<F: Field> SyzygyMatrix<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn forms(&self) -> &[Polynomial<F>] {
        &self.forms
    }

    pub fn columns(&self) -> &[Vec<Polynomial<F>>] {
        &self.columns
    }

    /// Degree of each column as an element of `⊕ R(-deg f_i)`.
    pub fn column_degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn rows(&self) -> usize {
        self.forms.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// `Σ c_i f_i = 0` for every column.
    pub fn is_exact(&self) -> Result<bool> {
        for col in &self.columns {
            let mut acc = Polynomial::zero(&self.ring);
            for (c, f) in col.iter().zip(&self.forms) {
                acc = acc.try_add(&c.try_mul(f)?)?;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.columns.iter().flatten()
    }
}

/// Minimal first syzygies of nonzero homogeneous forms.
pub fn syzygies<F: Field>(ring: &RingRef<F>, forms: &[Polynomial<F>]) -> Result<SyzygyMatrix<F>> {
    let m = forms.len();
    let n = ring.nvars();
    for f in forms {
        if !f.ring().same_as(ring) {
            return Err(AlgebraError::RingMismatch);
        }
        if f.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(f.to_string()));
        }
    }
    if 1 + n + m > MAX_VARS {
        return Err(AlgebraError::TooManyVariables(1 + n + m, MAX_VARS));
    }
    // Layout: e_0, x_1..x_n, e_1..e_m.
    let tags = ring.fresh_names("e", m + 1);
    let mut names = vec![tags[0].clone()];
    names.extend(ring.names().iter().cloned());
    names.extend(tags[1..].iter().cloned());
    let mut weights = vec![1u16];
    weights.extend_from_slice(ring.weights());
    for f in forms {
        let w = f.degree() + 1;
        weights.push(u16::try_from(w).map_err(|_| AlgebraError::ExponentOverflow(w))?);
    }
    let big = ring.derived(&names, &weights, n)?;
    let up: Vec<usize> = (1..=n).collect();
    let e = |i: usize| if i == 0 { 0 } else { n + i };

    let mut quadrics = Vec::new();
    for a in 0..=m {
        for b in a..=m {
            quadrics.push(big.monomial(Monomial::var(e(a), 1).mul(&Monomial::var(e(b), 1))));
        }
    }
    let mut gens = quadrics.clone();
    for (i, f) in forms.iter().enumerate() {
        let lifted = f.map_vars(&big, &up).try_mul(&big.var(0))?;
        gens.push(lifted.try_add(&big.var(e(i + 1)))?);
    }
    let gb = GroebnerBasis::compute(&big, &gens, big.order(OrderKind::Elimination { front: 1 }))?;
    let e_degree = |mono: &Monomial| (0..=m).map(|i| mono.exp(e(i)) as u32).sum::<u32>();
    let candidates: Vec<Polynomial<F>> = gb
        .free_of(&[0])
        .into_iter()
        .filter(|p| p.terms().iter().all(|(mono, _)| e_degree(mono) == 1))
        .map(|p| p.with_order(big.grevlex()))
        .collect();

    // Minimalize modulo the e-quadrics in the tag variables e_1..e_m.
    let tail_quadrics: Vec<Polynomial<F>> = quadrics
        .into_iter()
        .filter(|q| q.terms()[0].0.exp(0) == 0)
        .collect();
    let nq = tail_quadrics.len();
    let mut pool = tail_quadrics;
    pool.extend(candidates.iter().cloned());
    let keep = minimal_generator_indices(&big, &pool)?;

    let mut down = vec![usize::MAX; big.nvars()];
    for i in 0..n {
        down[i + 1] = i;
    }
    let mut columns = Vec::new();
    let mut degrees = Vec::new();
    for k in keep.into_iter().filter(|&k| k >= nq) {
        let p = &pool[k];
        let mut col = vec![Vec::new(); m];
        for (mono, c) in p.terms() {
            let i = (1..=m).find(|&i| mono.exp(e(i)) == 1).expect("e-linear term");
            col[i - 1].push((mono.with_exp(e(i), 0), c.clone()));
        }
        let col: Vec<Polynomial<F>> = col
            .into_iter()
            .map(|terms| {
                let tmp = Polynomial::from_terms(&big, terms);
                tmp.map_vars(ring, &down)
            })
            .collect();
        degrees.push(p.degree() - 1);
        columns.push(col);
    }
    let phi = SyzygyMatrix {
        ring: ring.clone(),
        forms: forms.to_vec(),
        columns,
        degrees,
    };
    if !phi.is_exact()? {
        return Err(AlgebraError::Internal("syzygy column fails to annihilate the forms".into()));
    }
    Ok(phi)
}

/// The ideal generated by the entries of a syzygy matrix.
pub fn i1<F: Field>(phi: &SyzygyMatrix<F>) -> Result<Ideal<F>> {
    Ideal::new(&phi.ring, phi.entries().filter(|p| !p.is_zero()).cloned().collect())
}
