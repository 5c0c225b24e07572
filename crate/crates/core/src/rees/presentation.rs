use serde::{Deserialize, Serialize};

use crate::arith::{Field, Monomial, OrderKind, Polynomial, Ring, RingExt, RingRef};
use crate::error::{AlgebraError, Result};
use crate::groebner::{i1, syzygies, GroebnerBasis, Ideal, SyzygyMatrix};

/// How the Rees ideal is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReesMethod {
    /// Eliminate `t` from `(T_i - f_i t)`.
    #[default]
    Elimination,
    /// Saturate the symmetric ideal `(L_1)` by the first variable.
    Saturation,
}

/// `B = R[T_1..T_m]` presenting `R[It]` through `T_i ↦ f_i t`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    base: RingRef<F>,
    ring: RingRef<F>,
    forms: Vec<Polynomial<F>>,
    rees: Ideal<F>,
    phi: SyzygyMatrix<F>,
    sym: Ideal<F>,
}

impl<F: Field> ReesPresentation<F> {
    /// Builds `B`, computes `L`, `φ` and `(L_1)`, and checks that every
    /// generator of `L` lies in the kernel and that `(L_1) ⊆ L`.
    pub fn new(base: &RingRef<F>, forms: &[Polynomial<F>], t_names: &[String], method: ReesMethod) -> Result<Self> {
        let ring = presentation_ring(base, forms, t_names)?;
        let phi = syzygies(base, forms)?;
        let sym = sym_ideal(&ring, &phi)?;
        let rees = match method {
            ReesMethod::Elimination => rees_ideal(&ring, forms)?,
            ReesMethod::Saturation => rees_by_saturation(&sym, base)?,
        };
        let mut gens = rees.minimal_generators()?;
        gens.sort_by_key(|g| {
            let (x, t) = ring.bidegree(&g.terms()[0].0);
            (t, x)
        });
        let rees = Ideal::new(&ring, gens)?;
        for g in rees.gens() {
            if !rees_membership(g, forms)? {
                return Err(AlgebraError::Internal(format!("{g} does not vanish on the forms")));
            }
        }
        if !rees.contains_ideal(&sym)? {
            return Err(AlgebraError::Internal("(L_1) is not contained in L".into()));
        }
        Ok(Self {
            base: base.clone(),
            ring,
            forms: forms.to_vec(),
            rees,
            phi,
            sym,
        })
    }

    pub fn base(&self) -> &RingRef<F> {
        &self.base
    }

    /// The presentation ring `B`.
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn forms(&self) -> &[Polynomial<F>] {
        &self.forms
    }

    /// `L`, presented by minimal generators sorted by T-degree.
    pub fn rees_ideal(&self) -> &Ideal<F> {
        &self.rees
    }

    pub fn syzygies(&self) -> &SyzygyMatrix<F> {
        &self.phi
    }

    /// `(L_1)`.
    pub fn sym_ideal(&self) -> &Ideal<F> {
        &self.sym
    }

    pub fn i1(&self) -> Result<Ideal<F>> {
        i1(&self.phi)
    }

    pub fn nbase(&self) -> usize {
        self.base.nvars()
    }

    /// Indices of the T-variables in `B`.
    pub fn t_vars(&self) -> std::ops::Range<usize> {
        self.nbase()..self.ring.nvars()
    }

    /// `(x-degree, T-degree)` of each minimal generator of `L`.
    pub fn generator_bidegrees(&self) -> Vec<(u32, u32)> {
        self.rees.gens().iter().map(|g| self.ring.bidegree(&g.terms()[0].0)).collect()
    }

    /// Bidegrees `(R-degree, T-degree)` under which `L` is homogeneous:
    /// `x_i` counts `(w_i, 0)` and `T_i` counts `(deg f_i, 1)`.
    pub fn rees_grading(&self) -> Vec<(u32, u32)> {
        let mut d: Vec<(u32, u32)> = self.base.weights().iter().map(|&w| (w as u32, 0)).collect();
        d.extend(self.forms.iter().map(|f| (f.degree(), 1)));
        d
    }
}

/// `R[T_1..T_m]` with `T_i` weighted by `deg f_i`, base variables first.
pub fn presentation_ring<F: Field>(base: &RingRef<F>, forms: &[Polynomial<F>], t_names: &[String]) -> Result<RingRef<F>> {
    if forms.is_empty() {
        return Err(AlgebraError::Precondition("no generators".into()));
    }
    if t_names.len() != forms.len() {
        return Err(AlgebraError::Precondition("one T-variable per generator is required".into()));
    }
    let mut names: Vec<String> = base.names().to_vec();
    names.extend(t_names.iter().cloned());
    let mut weights: Vec<u16> = base.weights().to_vec();
    for f in forms {
        if f.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(f.to_string()));
        }
        weights.push(u16::try_from(f.degree()).map_err(|_| AlgebraError::ExponentOverflow(f.degree()))?);
    }
    base.derived(&names, &weights, base.nvars())
}

/// Default T-variable names `T1..Tm`, renaming any clash with the base ring.
pub fn default_t_names<F: Field>(base: &RingRef<F>, m: usize, last_is_u: bool) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(m);
    for i in 0..m {
        let want = if last_is_u && i + 1 == m { "u".to_string() } else { format!("T{}", i + 1) };
        let mut name = want.clone();
        let mut k = 0;
        while base.var_index(&name).is_some() || out.contains(&name) {
            k += 1;
            name = format!("{want}_{k}");
        }
        out.push(name);
    }
    out
}

/// `L = ker(B → R[It])` by eliminating `t` from `(T_i - f_i t)`.
pub fn rees_ideal<F: Field>(b: &RingRef<F>, forms: &[Polynomial<F>]) -> Result<Ideal<F>> {
    let d = b.nbase();
    let n = b.nvars();
    let t_name = b.fresh_names("t", 1).remove(0);
    let mut names = vec![t_name];
    names.extend(b.names().iter().cloned());
    let mut weights = vec![1u16];
    weights.extend_from_slice(&b.weights()[..d]);
    for f in forms {
        weights.push(u16::try_from(f.degree() + 1).map_err(|_| AlgebraError::ExponentOverflow(f.degree()))?);
    }
    let aux = b.derived(&names, &weights, d + 1)?;
    let up: Vec<usize> = (1..=d).collect();
    let t = aux.var(0);
    let gens = forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let ft = f.map_vars(&aux, &up).try_mul(&t)?;
            aux.var(d + 1 + i).try_sub(&ft)
        })
        .collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::compute(&aux, &gens, aux.order(OrderKind::Elimination { front: 1 }))?;
    let mut down = vec![usize::MAX];
    down.extend(0..n);
    let l: Vec<_> = gb.free_of(&[0]).iter().map(|p| p.map_vars(b, &down)).collect();
    Ideal::new(b, l)
}

/// `L = (L_1) : x_1^∞`, valid once a power of `x_1` lies in `I`.
pub fn rees_by_saturation<F: Field>(sym: &Ideal<F>, base: &RingRef<F>) -> Result<Ideal<F>> {
    if base.nvars() == 0 {
        return Err(AlgebraError::Precondition("no base variables".into()));
    }
    sym.saturate_variable(0)
}

/// Whether `g(f_1 t, .., f_m t) = 0`. Exact and independent of any basis of `L`.
pub fn rees_membership<F: Field>(g: &Polynomial<F>, forms: &[Polynomial<F>]) -> Result<bool> {
    let b = g.ring();
    let d = b.nbase();
    if b.nvars() != d + forms.len() {
        return Err(AlgebraError::Precondition("presentation ring does not match the forms".into()));
    }
    let base = forms[0].ring();
    let t_name = base.fresh_names("t", 1).remove(0);
    let mut names: Vec<String> = base.names().to_vec();
    names.push(t_name);
    let target = Ring::new(base.field().clone(), &names)?;
    let up: Vec<usize> = (0..d).collect();
    let t = target.var(d);
    let mut images: Vec<Polynomial<F>> = (0..d).map(|i| target.var(i)).collect();
    for f in forms {
        images.push(f.map_vars(&target, &up).try_mul(&t)?);
    }
    Ok(g.substitute(&images)?.is_zero())
}

/// Compares a candidate presentation of `L` with the computed one. The
/// forward inclusion uses only substitution.
pub fn verify_rees_candidate<F: Field>(candidate: &Ideal<F>, forms: &[Polynomial<F>], rees: &Ideal<F>) -> Result<CandidateCheck> {
    let mut inside = true;
    for g in candidate.gens() {
        if !rees_membership(g, forms)? {
            inside = false;
            break;
        }
    }
    let covers = candidate.contains_ideal(rees)?;
    Ok(CandidateCheck {
        candidate_in_kernel: inside,
        kernel_in_candidate: Some(covers),
    })
}

/// Outcome of comparing a candidate generator list with `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub candidate_in_kernel: bool,
    /// `None` when `L` itself could not be computed within budget.
    pub kernel_in_candidate: Option<bool>,
}

impl CandidateCheck {
    pub fn equal(&self) -> bool {
        self.candidate_in_kernel && self.kernel_in_candidate == Some(true)
    }
}

/// `(L_1)`: the entries of `[T_1..T_m]·φ`.
pub fn sym_ideal<F: Field>(b: &RingRef<F>, phi: &SyzygyMatrix<F>) -> Result<Ideal<F>> {
    let d = b.nbase();
    let up: Vec<usize> = (0..d).collect();
    let gens = phi
        .columns()
        .iter()
        .map(|col| {
            let mut acc = Polynomial::zero(b);
            for (i, c) in col.iter().enumerate() {
                let term = c.map_vars(b, &up).try_mul(&b.monomial(Monomial::var(d + i, 1)))?;
                acc = acc.try_add(&term)?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(b, gens)
}
