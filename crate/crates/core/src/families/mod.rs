//! Constructors for the ideal families: monomial almost complete
//! intersections, binary ideals of 2x2 minors, quaternary quadrics,
//! Northcott ideals and links.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{Field, GbLimits, Polynomial, Ring, RingExt, RingRef};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{colength, h_vector, HVector};
use crate::rees::reduction_number;

#[cfg(test)]
mod tests;

/// Presentation of `I` by `forms` under which `equations` are claimed to
/// generate the Rees ideal.
#[derive(Clone, Debug)]
pub struct ReesCandidate<F: Field> {
    pub forms: Vec<Polynomial<F>>,
    pub t_names: Vec<String>,
    pub equations: Vec<String>,
}

/// An ideal together with a designated reduction.
#[derive(Clone, Debug)]
pub struct FamilyInstance<F: Field> {
    pub label: String,
    pub ring: RingRef<F>,
    pub ideal: Vec<Polynomial<F>>,
    pub reduction: Vec<Polynomial<F>>,
    pub candidate: Option<ReesCandidate<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HfTag {
    Hf141,
    Hf131,
    Hf121,
}

impl std::str::FromStr for HfTag {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hf141" => Ok(Self::Hf141),
            "hf131" => Ok(Self::Hf131),
            "hf121" => Ok(Self::Hf121),
            _ => Err(AlgebraError::Precondition(format!("unknown tag {s:?}; expected hf141, hf131 or hf121"))),
        }
    }
}

/// Source of the 3x2 matrix of a binary ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BinaryMatrix {
    /// Three rows of two forms in `x, y`.
    Explicit { rows: Vec<Vec<String>> },
    /// Columns of degrees 1 and `n - 1` with linear entries spanning `(x, y)`.
    Linear { n: u32 },
    /// Seeded search for a quadric matrix with reduction number 3.
    QuadricSearch { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `(a, b, c, α, β, γ)`, or any `2d` exponents in `d` variables.
    MonomialAci { params: Vec<u32> },
    BinaryMatrix { matrix: BinaryMatrix },
    QuaternaryExample { tag: HfTag },
    /// Defaults to the standard non-aCM example.
    Northcott {
        #[serde(default)]
        v: Option<Vec<String>>,
        #[serde(default)]
        a: Option<Vec<Vec<String>>>,
    },
    /// `J : K`, with `K` the maximal ideal when omitted.
    Link {
        vars: Vec<String>,
        j: Vec<String>,
        #[serde(default)]
        k: Option<Vec<String>>,
    },
}

impl FamilySpec {
    pub fn instantiate<F: Field>(&self, field: F, limits: GbLimits) -> Result<FamilyInstance<F>> {
        match self {
            FamilySpec::MonomialAci { params } => {
                let d = params.len() / 2;
                if params.len() % 2 != 0 || d < 2 {
                    return Err(AlgebraError::Precondition(
                        "monomial_aci takes d exponents followed by d mixed exponents".into(),
                    ));
                }
                let m = monomial_aci(field, limits, &params[..d], &params[d..])?;
                let label = format!("monomial_aci{params:?}");
                let candidate = if d == 3 && params[..3].iter().all(|&e| e == params[0]) && params[3..] == [1, 1, 1] {
                    Some(mono_candidate(&m.ring, params[0])?)
                } else {
                    None
                };
                Ok(FamilyInstance {
                    label,
                    ring: m.ring,
                    ideal: m.i,
                    reduction: m.q,
                    candidate,
                })
            }
            FamilySpec::BinaryMatrix { matrix } => {
                let ring = Ring::with_grading(field, &["x", "y"], &[1, 1], 2, limits)?;
                let (rows, label) = match matrix {
                    BinaryMatrix::Explicit { rows } => (parse_matrix(&ring, rows, 3, 2)?, "binary_matrix".to_string()),
                    BinaryMatrix::Linear { n } => (binary_linear_matrix(&ring, *n)?, format!("binary_linear[{n}]")),
                    BinaryMatrix::QuadricSearch { seed } => {
                        let found = search_binary_quadrics(&ring, *seed, 3, 200)?;
                        (found.matrix, format!("binary_quadric[seed={seed}]"))
                    }
                };
                let (i, j) = binary_ideal(&ring, &rows, 0)?;
                Ok(FamilyInstance {
                    label,
                    ring,
                    ideal: i,
                    reduction: j,
                    candidate: None,
                })
            }
            FamilySpec::QuaternaryExample { tag } => {
                let ring = Ring::with_grading(field, &["x", "y", "z", "w"], &[1; 4], 4, limits)?;
                let (j, a) = quaternary_example(&ring, *tag)?;
                let mut i = j.clone();
                i.push(a);
                Ok(FamilyInstance {
                    label: format!("quaternary_{tag:?}").to_lowercase(),
                    ring,
                    ideal: i,
                    reduction: j,
                    candidate: None,
                })
            }
            FamilySpec::Northcott { v, a } => {
                let ring = Ring::with_grading(field, &["x", "y", "z", "w"], &[1; 4], 4, limits)?;
                let (dv, da) = northcott_example_text();
                let v = match v {
                    Some(v) => v.clone(),
                    None => dv,
                };
                let a = match a {
                    Some(a) => a.clone(),
                    None => da,
                };
                let vv = v.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
                let aa = parse_matrix(&ring, &a, 4, 4)?;
                let (j, det) = northcott_ideal(&ring, &vv, &aa)?;
                let mut i = j.clone();
                i.push(det);
                Ok(FamilyInstance {
                    label: "northcott".into(),
                    ring,
                    ideal: i,
                    reduction: j,
                    candidate: None,
                })
            }
            FamilySpec::Link { vars, j, k } => {
                let ring = Ring::with_grading(field, vars, &vec![1; vars.len()], vars.len(), limits)?;
                let jg = j.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
                let jj = Ideal::new(&ring, jg.clone())?;
                let kk = match k {
                    Some(k) => Ideal::new(&ring, k.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?)?,
                    None => Ideal::of_variables(&ring, 0..ring.nvars()),
                };
                let i = link_ideal(&jj, &kk)?.minimalized()?;
                Ok(FamilyInstance {
                    label: "link".into(),
                    ring,
                    ideal: i.gens().to_vec(),
                    reduction: jg,
                    candidate: None,
                })
            }
        }
    }
}

fn parse_matrix<F: Field>(ring: &RingRef<F>, rows: &[Vec<String>], r: usize, c: usize) -> Result<Vec<Vec<Polynomial<F>>>> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(AlgebraError::Precondition(format!("expected a {r}x{c} matrix")));
    }
    rows.iter()
        .map(|row| row.iter().map(|s| ring.parse(s)).collect())
        .collect()
}

/// Monomial almost complete intersection `I = (x_i^{a_i}, x^α)` in `d`
/// variables, the monomial complete intersection `J` and the reduction
/// `Q = (x_i^{a_i} - x_d^{a_d}, x^α)`.
#[derive(Clone, Debug)]
pub struct MonomialAci<F: Field> {
    pub ring: RingRef<F>,
    pub i: Vec<Polynomial<F>>,
    pub j: Vec<Polynomial<F>>,
    pub q: Vec<Polynomial<F>>,
    /// Whether `a_i > 3 α_i` for every `i`.
    pub strong_hypothesis: bool,
}

/// Variables are named `x, y, z, w` (up to four) or `x1..xd`. When the pure
/// powers differ, `x_i` gets weight `lcm(a) / a_i` so that `Q` is homogeneous.
pub fn monomial_aci<F: Field>(field: F, limits: GbLimits, powers: &[u32], mixed: &[u32]) -> Result<MonomialAci<F>> {
    let d = powers.len();
    if d < 2 || mixed.len() != d {
        return Err(AlgebraError::Precondition("need d >= 2 pure powers and d mixed exponents".into()));
    }
    if powers.contains(&0) || mixed.iter().all(|&e| e == 0) {
        return Err(AlgebraError::Precondition("exponents of the pure powers must be positive".into()));
    }
    // Σ α_i / a_i ≤ 1, cleared of denominators. Equality covers the
    // families I(n,n,n,1,1,1) at n = 3 and I(n,n,n,n,1,1,1,1) at n = 4.
    let prod: u128 = powers.iter().map(|&a| a as u128).product();
    let lhs: u128 = mixed.iter().zip(powers).map(|(&al, &a)| al as u128 * (prod / a as u128)).sum();
    if lhs > prod {
        return Err(AlgebraError::Precondition(format!(
            "the mixed exponents {mixed:?} must satisfy sum alpha_i/a_i <= 1 for the powers {powers:?}"
        )));
    }
    let names: Vec<String> = if d <= 4 {
        ["x", "y", "z", "w"][..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("x{i}")).collect()
    };
    let l = powers.iter().fold(1u64, |acc, &a| num_integer::lcm(acc, a as u64));
    let weights = powers
        .iter()
        .map(|&a| u16::try_from(l / a as u64).map_err(|_| AlgebraError::ExponentOverflow(l as u32)))
        .collect::<Result<Vec<_>>>()?;
    let ring = Ring::with_grading(field, &names, &weights, d, limits)?;
    let pure = |i: usize| ring.var(i).try_pow(powers[i]);
    let mut mono = ring.one();
    for (i, &e) in mixed.iter().enumerate() {
        mono = mono.try_mul(&ring.var(i).try_pow(e)?)?;
    }
    let mut j = Vec::with_capacity(d);
    for i in 0..d {
        j.push(pure(i)?);
    }
    let mut i_gens = vec![mono.clone()];
    i_gens.extend(j.iter().cloned());
    let last = pure(d - 1)?;
    let mut q = Vec::with_capacity(d);
    for i in 0..d - 1 {
        q.push(pure(i)?.try_sub(&last)?);
    }
    q.push(mono);
    Ok(MonomialAci {
        strong_hypothesis: mixed.iter().zip(powers).all(|(&al, &a)| a > 3 * al),
        ring,
        i: i_gens,
        j,
        q,
    })
}

fn mon(factors: &[(&str, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|f| f.1 > 0)
        .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The ten claimed generators of the Rees ideal of `(x^n, y^n, z^n, xyz)`
/// in `k[x, y, z, T1, T2, T3, u]`, with `T_i` mapping to the pure powers
/// and `u` to `xyz`.
pub fn mono_rees_candidate(n: u32) -> Result<Vec<String>> {
    if n < 3 {
        return Err(AlgebraError::Precondition("the candidate list needs n >= 3".into()));
    }
    let (a, b, c) = (n - 1, n - 2, n - 3);
    Ok(vec![
        format!("{} - x*y*T3", mon(&[("z", a), ("u", 1)])),
        format!("{} - x*z*T2", mon(&[("y", a), ("u", 1)])),
        format!("{} - y*z*T1", mon(&[("x", a), ("u", 1)])),
        format!("z^{n}*T2 - y^{n}*T3"),
        format!("z^{n}*T1 - x^{n}*T3"),
        format!("y^{n}*T1 - x^{n}*T2"),
        format!("{} - x^2*T2*T3", mon(&[("y", b), ("z", b), ("u", 2)])),
        format!("{} - y^2*T1*T3", mon(&[("x", b), ("z", b), ("u", 2)])),
        format!("{} - z^2*T1*T2", mon(&[("x", b), ("y", b), ("u", 2)])),
        format!("{} - T1*T2*T3", mon(&[("x", c), ("y", c), ("z", c), ("u", 3)])),
    ])
}

fn mono_candidate<F: Field>(ring: &RingRef<F>, n: u32) -> Result<ReesCandidate<F>> {
    let forms = ring.parse_list(&format!("x^{n}, y^{n}, z^{n}, x*y*z"))?;
    Ok(ReesCandidate {
        forms,
        t_names: ["T1", "T2", "T3", "u"].iter().map(|s| s.to_string()).collect(),
        equations: mono_rees_candidate(n)?,
    })
}

/// 2x2 minors of a 3x2 matrix over `k[x, y]`: the minors on rows
/// `(1,2), (1,3), (2,3)`, and a reduction `J`. `J` is the first two minors
/// when they form a reduction, otherwise random combinations (seeded by
/// `seed`, at most 10 tries).
pub fn binary_ideal<F: Field>(ring: &RingRef<F>, m: &[Vec<Polynomial<F>>], seed: u64) -> Result<(Vec<Polynomial<F>>, Vec<Polynomial<F>>)> {
    if ring.nvars() != 2 {
        return Err(AlgebraError::Precondition("binary ideals live in k[x, y]".into()));
    }
    if m.len() != 3 || m.iter().any(|r| r.len() != 2) {
        return Err(AlgebraError::Precondition("expected a 3x2 matrix".into()));
    }
    for c in 0..2 {
        let mut deg = None;
        for row in m {
            let e = &row[c];
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(e.to_string()));
            }
            if *deg.get_or_insert(e.degree()) != e.degree() {
                return Err(AlgebraError::Precondition(format!("column {} has entries of different degrees", c + 1)));
            }
        }
    }
    let minor = |r: usize, s: usize| -> Result<Polynomial<F>> { m[r][0].try_mul(&m[s][1])?.try_sub(&m[s][0].try_mul(&m[r][1])?) };
    let minors = vec![minor(0, 1)?, minor(0, 2)?, minor(1, 2)?];
    let degenerate = || AlgebraError::Precondition("degenerate matrix: the minors do not have codimension 2".into());
    if minors.iter().any(|p| p.is_zero()) {
        return Err(degenerate());
    }
    let i = Ideal::new(ring, minors.clone())?;
    match colength(&i) {
        Ok(_) => {}
        Err(AlgebraError::NonZeroDimensional) => return Err(degenerate()),
        Err(e) => return Err(e),
    }
    let bound = 4 * minors[0].degree() + 4;
    let is_reduction = |j: &[Polynomial<F>]| -> Result<bool> {
        let jj = Ideal::new(ring, j.to_vec())?;
        if colength(&jj).is_err() {
            return Ok(false);
        }
        match reduction_number(&i, &jj, bound) {
            Ok(_) => Ok(true),
            Err(AlgebraError::BoundExceeded { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let first = minors[..2].to_vec();
    if is_reduction(&first)? {
        return Ok((minors, first));
    }
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let mut j = Vec::with_capacity(2);
        for _ in 0..2 {
            let mut g = ring.zero();
            for p in &minors {
                g = g.try_add(&p.scale(&field.random_nonzero(&mut rng)))?;
            }
            j.push(g);
        }
        if is_reduction(&j)? {
            return Ok((minors, j));
        }
    }
    Err(AlgebraError::Precondition("no reduction found among ten random combinations of the minors".into()))
}

/// Rows `(x, y^{n-1}), (y, x^{n-1}), (0, x^{n-2} y)`.
pub fn binary_linear_matrix<F: Field>(ring: &RingRef<F>, n: u32) -> Result<Vec<Vec<Polynomial<F>>>> {
    if n < 2 {
        return Err(AlgebraError::Precondition("n must be at least 2".into()));
    }
    let p = |s: String| ring.parse(&s);
    Ok(vec![
        vec![p("x".into())?, p(format!("y^{}", n - 1))?],
        vec![p("y".into())?, p(format!("x^{}", n - 1))?],
        vec![ring.zero(), p(format!("x^{}*y", n - 2))?],
    ])
}

#[derive(Clone, Debug)]
pub struct QuadricSearch<F: Field> {
    pub matrix: Vec<Vec<Polynomial<F>>>,
    pub attempts: u32,
    pub red: u32,
}

/// Draws 3x2 matrices of binary quadrics with integer coefficients in
/// `[-3, 3]` until the ideal of minors has reduction number `target` with
/// respect to its first two minors.
pub fn search_binary_quadrics<F: Field>(ring: &RingRef<F>, seed: u64, target: u32, max_attempts: u32) -> Result<QuadricSearch<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monos = ring.parse_list("x^2, x*y, y^2")?;
    for attempt in 1..=max_attempts {
        let mut m = Vec::with_capacity(3);
        for _ in 0..3 {
            let mut row = Vec::with_capacity(2);
            for _ in 0..2 {
                let mut e = ring.zero();
                for mono in &monos {
                    let c = rng.gen_range(-3i64..=3);
                    e = e.try_add(&mono.scale(&ring.field().from_int(c)))?;
                }
                row.push(e);
            }
            m.push(row);
        }
        if m.iter().flatten().any(|e| e.is_zero()) {
            continue;
        }
        let Ok((i, j)) = binary_ideal(ring, &m, seed) else { continue };
        if j[..] != i[..2] {
            continue;
        }
        let red = reduction_number(&Ideal::new(ring, i)?, &Ideal::new(ring, j)?, 16)?;
        if red == target {
            return Ok(QuadricSearch { matrix: m, attempts: attempt, red });
        }
    }
    Err(AlgebraError::BoundExceeded {
        what: format!("no quadric matrix with reduction number {target}"),
        bound: max_attempts as usize,
    })
}

/// `J = (x^2, y^2, z^2, w^2)` and the quadric `a` of the tagged example.
pub fn quaternary_example<F: Field>(ring: &RingRef<F>, tag: HfTag) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    if ring.nvars() != 4 {
        return Err(AlgebraError::Precondition("quaternary examples need four variables".into()));
    }
    let n = ring.names();
    let (x, y, z, w) = (&n[0], &n[1], &n[2], &n[3]);
    let j = ring.parse_list(&format!("{x}^2, {y}^2, {z}^2, {w}^2"))?;
    let a = match tag {
        HfTag::Hf141 => format!("{x}*{y} + {x}*{z} + {x}*{w} + {y}*{z}"),
        HfTag::Hf131 => format!("{x}*{y} + {y}*{z} + {z}*{w} + {w}*{x} + {y}*{w}"),
        HfTag::Hf121 => format!("{x}*{y} + {y}*{z} + {x}*{w} + {z}*{w}"),
    };
    Ok((j, ring.parse(&a)?))
}

/// The standard Northcott example in `k[x, y, z, w]`.
pub fn northcott_example_text() -> (Vec<String>, Vec<Vec<String>>) {
    let v = ["x", "y", "z^2 + z*w + w^2", "z^2 - w^2"];
    let a = [
        ["x + y", "z + w", "x - w", "z"],
        ["z", "y + w", "x - z", "y"],
        ["1", "0", "2", "3"],
        ["0", "1", "1", "2"],
    ];
    (
        v.iter().map(|s| s.to_string()).collect(),
        a.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
    )
}

/// `(V·A, det A)` for `V = [x, y, α, β]` with `α, β` quadrics in the last two
/// variables and `A` with linear top rows and scalar bottom rows.
pub fn northcott_ideal<F: Field>(ring: &RingRef<F>, v: &[Polynomial<F>], a: &[Vec<Polynomial<F>>]) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    if ring.nvars() != 4 || v.len() != 4 || a.len() != 4 || a.iter().any(|r| r.len() != 4) {
        return Err(AlgebraError::Precondition("need V of length 4 and a 4x4 matrix A over four variables".into()));
    }
    let shape = |msg: &str| AlgebraError::Precondition(msg.to_string());
    for (k, f) in v.iter().enumerate() {
        let want = if k < 2 { 1 } else { 2 };
        if f.is_zero() || !f.is_homogeneous() || f.degree() != want {
            return Err(shape("V must be two linear forms followed by two quadrics"));
        }
        if k >= 2 && f.support().iter().any(|&i| i < 2) {
            return Err(shape("the quadrics of V must involve only the last two variables"));
        }
    }
    for (r, row) in a.iter().enumerate() {
        for e in row {
            let ok = if r < 2 { e.is_zero() || (e.is_homogeneous() && e.degree() == 1) } else { e.is_zero() || e.is_constant() };
            if !ok {
                return Err(shape("A needs linear forms in its top two rows and scalars in the bottom two"));
            }
        }
    }
    let mut j = Vec::with_capacity(4);
    for c in 0..4 {
        let mut e = ring.zero();
        for r in 0..4 {
            e = e.try_add(&v[r].try_mul(&a[r][c])?)?;
        }
        j.push(e);
    }
    let det = determinant(a)?;
    if det.is_zero() {
        return Err(AlgebraError::Precondition("det A vanishes".into()));
    }
    Ok((j, det))
}

fn determinant<F: Field>(a: &[Vec<Polynomial<F>>]) -> Result<Polynomial<F>> {
    let n = a.len();
    let ring = a[0][0].ring();
    if n == 1 {
        return Ok(a[0][0].clone());
    }
    let mut det = ring.zero();
    for c in 0..n {
        if a[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<F>>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = a[0][c].try_mul(&determinant(&minor)?)?;
        det = if c % 2 == 0 { det.try_add(&term)? } else { det.try_sub(&term)? };
    }
    Ok(det)
}

/// `J : K` for `J ⊆ K`.
pub fn link_ideal<F: Field>(j: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    if !k.contains_ideal(j)? {
        return Err(AlgebraError::Containment(format!("{j} is not contained in {k}")));
    }
    j.quotient(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfClassification {
    pub h_vector: HVector,
    pub allowed: bool,
    pub birational_compatible: bool,
}

const ALLOWED_HF: &[&[u64]] = &[
    &[1, 4, 1],
    &[1, 2, 2, 1],
    &[1, 1, 1, 1, 1, 1],
    &[1, 3, 1],
    &[1, 1, 1, 1, 1],
    &[1, 2, 1],
    &[1, 1, 1, 1],
    &[1, 1, 1],
    &[1, 1],
    &[1],
];

const BIRATIONAL_HF: &[&[u64]] = &[&[1, 4, 1], &[1, 3, 1], &[1, 2, 1]];

/// Hilbert function of `R/(J:a)` for four quadrics `J` forming a complete
/// intersection in four variables and a quadric `a ∉ J`.
pub fn classify_hf<F: Field>(j: &Ideal<F>, a: &Polynomial<F>) -> Result<HfClassification> {
    let ring = j.ring();
    if ring.nvars() != 4 || !ring.is_standard_graded() {
        return Err(AlgebraError::Precondition("classification is for standard graded k[x, y, z, w]".into()));
    }
    if j.len() != 4 || j.gens().iter().any(|g| !g.is_homogeneous() || g.degree() != 2) {
        return Err(AlgebraError::Precondition("J must be generated by four quadrics".into()));
    }
    if colength(j)? != 16 {
        return Err(AlgebraError::Precondition("J is not a complete intersection".into()));
    }
    if !a.is_homogeneous() || a.degree() != 2 {
        return Err(AlgebraError::Precondition("a must be a quadric".into()));
    }
    if j.contains(a)? {
        return Err(AlgebraError::Precondition(format!("{a} lies in J; (J, a) is not an almost complete intersection")));
    }
    Ok(classify_h_vector(h_vector(&j.quotient_poly(a)?)?))
}

/// Places an h-vector of `R/(J:a)` in the list of possible Hilbert functions.
pub fn classify_h_vector(hv: HVector) -> HfClassification {
    let vals = hv.values();
    HfClassification {
        allowed: ALLOWED_HF.contains(&vals),
        birational_compatible: BIRATIONAL_HF.contains(&vals),
        h_vector: hv,
    }
}
