use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::basis::{minimal_generator_indices, GroebnerBasis};
use super::linalg::Echelon;
use crate::arith::{Field, Monomial, MonomialOrder, OrderKind, Polynomial, RingExt, RingRef};
use crate::error::{AlgebraError, Result};

type Cache<F> = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>>>;

/// An ideal given by generators, caching one Gröbner basis per order.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    cache: Cache<F>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !g.ring().same_as(ring) {
                return Err(AlgebraError::RingMismatch);
            }
        }
        Ok(Self::from_parts(ring, gens))
    }

    fn from_parts(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Self {
        let order = ring.grevlex();
        Self {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect(),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn parse(ring: &RingRef<F>, text: &str) -> Result<Self> {
        Self::new(ring, ring.parse_list(text)?)
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Self::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Self::from_parts(ring, vec![ring.one()])
    }

    /// The ideal of all variables with index in `vars`.
    pub fn of_variables(ring: &RingRef<F>, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_parts(ring, vars.into_iter().map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_bihomogeneous())
    }

    /// Common degree of the generators, if there is one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        (self.is_homogeneous() && self.gens.iter().all(|g| g.degree() == d)).then_some(d)
    }

    fn check(&self, other: &Ideal<F>) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn gb_with(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(g) = self.cache.lock().expect("cache poisoned").get(&order) {
            return Ok(g.clone());
        }
        let g = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, order)?);
        self.cache.lock().expect("cache poisoned").insert(order, g.clone());
        Ok(g)
    }

    /// Gröbner basis under the ring's weighted grevlex order.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis<F>>> {
        self.gb_with(self.ring.grevlex())
    }

    /// Installs a basis computed elsewhere; it must generate this ideal.
    pub fn with_cached_gb(self, gb: GroebnerBasis<F>) -> Self {
        self.cache.lock().expect("cache poisoned").insert(gb.order(), Arc::new(gb));
        self
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.gb()?.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.gb()?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(true);
        }
        let gb = self.gb()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_parts(&self.ring, gens))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ok(Self::from_parts(&self.ring, prune(&self.ring, gens)?))
    }

    pub fn scale(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        let gens = self.gens.iter().map(|g| g.try_mul(f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, gens))
    }

    /// `I^j` by repeated multiplication, pruning the generator list each step.
    pub fn power(&self, j: u32) -> Result<Ideal<F>> {
        if j == 0 {
            return Ok(Self::unit(&self.ring));
        }
        let mut acc = self.clone();
        for _ in 1..j {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ K` by eliminating `t` from `t·I + (1−t)·K`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let t_name = self.ring.fresh_names("t", 1).remove(0);
        let mut names = vec![t_name];
        names.extend(self.ring.names().iter().cloned());
        let mut weights = vec![1u16];
        weights.extend_from_slice(self.ring.weights());
        let big = self.ring.derived(&names, &weights, n + 1)?;
        let up: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = big.one().try_sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.map_vars(&big, &up).try_mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.map_vars(&big, &up).try_mul(&one_minus_t)?);
        }
        let order = big.order(OrderKind::Elimination { front: 1 });
        let gb = GroebnerBasis::compute(&big, &gens, order)?;
        let mut down = vec![usize::MAX];
        down.extend(0..n);
        let out = gb
            .free_of(&[0])
            .into_iter()
            .map(|p| map_back(&p, &self.ring, &down))
            .collect();
        Ok(Self::from_parts(&self.ring, out))
    }

    /// `I : f`, via `(I ∩ (f)) / f`.
    pub fn quotient_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if self.contains(f)? {
            return Ok(Self::unit(&self.ring));
        }
        let principal = Self::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet.gens.iter().map(|g| g.exact_div(f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, prune(&self.ring, gens)?))
    }

    /// `I : K`, the intersection of `I : k` over the generators of `K`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        if other.is_zero() {
            return Err(AlgebraError::Precondition("quotient by the zero ideal".into()));
        }
        let mut acc: Option<Ideal<F>> = None;
        for k in &other.gens {
            let q = self.quotient_poly(k)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `I : x_var^∞` for homogeneous `I`, by computing a grevlex basis with
    /// the variable last and dividing out its highest power.
    pub fn saturate_variable(&self, var: usize) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(AlgebraError::Precondition("variable index out of range".into()));
        }
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous("saturation input".into()));
        }
        // perm[i] = position of variable i in the permuted ring.
        let perm: Vec<usize> = (0..n)
            .map(|i| match i.cmp(&var) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => n - 1,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect();
        let mut names = vec![String::new(); n];
        let mut weights = vec![0u16; n];
        for i in 0..n {
            names[perm[i]] = self.ring.names()[i].clone();
            weights[perm[i]] = self.ring.weights()[i];
        }
        let pr = self.ring.derived(&names, &weights, n)?;
        let gens: Vec<_> = self.gens.iter().map(|g| g.map_vars(&pr, &perm)).collect();
        let gb = GroebnerBasis::compute(&pr, &gens, pr.grevlex())?;
        let mut inv = vec![0usize; n];
        for i in 0..n {
            inv[perm[i]] = i;
        }
        let out = gb
            .polys()
            .into_iter()
            .map(|p| {
                let e = p.terms().iter().map(|(m, _)| m.exp(n - 1)).min().unwrap_or(0);
                let q = p.exact_div(&pr.monomial(Monomial::var(n - 1, e)))?;
                Ok(map_back(&q, &self.ring, &inv))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, out))
    }

    /// `I : K^∞` by iterated quotients.
    pub fn saturate(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if cur.contains_ideal(&next)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I ∩ k[remaining variables]`, returned in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        let mut front: Vec<usize> = vars.to_vec();
        front.sort_unstable();
        front.dedup();
        if front.iter().any(|&v| v >= n) {
            return Err(AlgebraError::Precondition("variable index out of range".into()));
        }
        let rest: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
        let mut perm = vec![0usize; n];
        for (pos, &v) in front.iter().chain(rest.iter()).enumerate() {
            perm[v] = pos;
        }
        let mut names = vec![String::new(); n];
        let mut weights = vec![0u16; n];
        for i in 0..n {
            names[perm[i]] = self.ring.names()[i].clone();
            weights[perm[i]] = self.ring.weights()[i];
        }
        let pr = self.ring.derived(&names, &weights, n)?;
        let gens: Vec<_> = self.gens.iter().map(|g| g.map_vars(&pr, &perm)).collect();
        let order = pr.order(OrderKind::Elimination { front: front.len() });
        let gb = GroebnerBasis::compute(&pr, &gens, order)?;
        let block: Vec<usize> = (0..front.len()).collect();
        let mut inv = vec![0usize; n];
        for i in 0..n {
            inv[perm[i]] = i;
        }
        let out = gb.free_of(&block).iter().map(|p| map_back(p, &self.ring, &inv)).collect();
        Ok(Self::from_parts(&self.ring, out))
    }

    /// A minimal generating set of a homogeneous ideal, ascending in degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        let idx = minimal_generator_indices(&self.ring, &self.gens)?;
        Ok(idx.into_iter().map(|i| self.gens[i].clone()).collect())
    }

    /// The same ideal presented by a minimal generating set.
    pub fn minimalized(&self) -> Result<Ideal<F>> {
        Ok(Self::from_parts(&self.ring, self.minimal_generators()?))
    }

    /// Image under the variable renaming `var_map` into `target`.
    pub fn map_to(&self, target: &RingRef<F>, var_map: &[usize]) -> Ideal<F> {
        Self::from_parts(target, self.gens.iter().map(|g| g.map_vars(target, var_map)).collect())
    }

    /// Substitutes each variable by the corresponding image.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let gens = self.gens.iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

fn map_back<F: Field>(p: &Polynomial<F>, target: &RingRef<F>, inv: &[usize]) -> Polynomial<F> {
    p.map_vars(target, inv)
}

/// Drops generators that are redundant in an obvious way: scalar multiples,
/// and for a single generating degree, vectors in the span of earlier ones.
fn prune<F: Field>(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Vec<Polynomial<F>>> {
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let m = g.monic();
        if seen.insert(m.to_string()) {
            out.push(m);
        }
    }
    let equi = out.first().map(|g| g.degree());
    let same_degree = equi.is_some() && out.iter().all(|g| g.is_homogeneous() && Some(g.degree()) == equi);
    if same_degree && out.len() > 1 {
        let mut ech = Echelon::new(ring.field().clone());
        out.retain(|g| ech.insert(g));
    }
    Ok(out)
}
