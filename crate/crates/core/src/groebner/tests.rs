use proptest::prelude::*;

use super::*;
use crate::arith::*;

fn ring(names: &[&str]) -> RingRef<PrimeField> {
    Ring::new(PrimeField::default(), names).unwrap()
}

fn ideal(r: &RingRef<PrimeField>, text: &str) -> Ideal<PrimeField> {
    Ideal::parse(r, text).unwrap()
}

/// Membership of a homogeneous `f` in a homogeneous ideal by row reduction
/// of the degree-`deg f` Macaulay matrix.
fn oracle_member(r: &RingRef<PrimeField>, gens: &[Polynomial<PrimeField>], f: &Polynomial<PrimeField>) -> bool {
    let p = 32003u64;
    let d = f.degree();
    let mut rows: Vec<Vec<(Monomial, u64)>> = Vec::new();
    for g in gens {
        if g.degree() > d {
            continue;
        }
        for m in monomials_of_degree(r.nvars(), d - g.degree()) {
            rows.push(g.terms().iter().map(|(gm, c)| (gm.mul(&m), *c as u64)).collect());
        }
    }
    let mut cols: Vec<Monomial> = rows.iter().flatten().map(|t| t.0).chain(f.terms().iter().map(|t| t.0)).collect();
    cols.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    cols.dedup();
    let idx = |m: &Monomial| cols.binary_search_by(|c| c.exponents().cmp(m.exponents())).unwrap();
    let dense = |terms: &[(Monomial, u64)]| {
        let mut v = vec![0u64; cols.len()];
        for (m, c) in terms {
            v[idx(m)] = (v[idx(m)] + c) % p;
        }
        v
    };
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let pow = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        acc
    };
    let reduce = |v: &mut Vec<u64>, basis: &Vec<Vec<u64>>| {
        for b in basis {
            let lead = b.iter().position(|&x| x != 0).unwrap();
            if v[lead] != 0 {
                let c = v[lead];
                for k in 0..v.len() {
                    v[k] = (v[k] + p * p - c * b[k] % p) % p;
                }
            }
        }
    };
    for row in &rows {
        let mut v = dense(row);
        reduce(&mut v, &basis);
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = pow(v[lead], p - 2);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            for b in basis.iter_mut() {
                if b[lead] != 0 {
                    let c = b[lead];
                    for k in 0..b.len() {
                        b[k] = (b[k] + p * p - c * v[k] % p) % p;
                    }
                }
            }
            basis.push(v);
        }
    }
    let ft: Vec<(Monomial, u64)> = f.terms().iter().map(|(m, c)| (*m, *c as u64)).collect();
    let mut v = dense(&ft);
    reduce(&mut v, &basis);
    v.iter().all(|&x| x == 0)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            cur[i] = d;
            out.push(Monomial::from_exponents(cur).unwrap());
            return;
        }
        for e in 0..=d {
            cur[i] = e;
            rec(n, d - e, i + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut vec![0; n], &mut out);
    out
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let gx = GroebnerBasis::compute(&r, &[r.parse("x").unwrap()], r.grevlex()).unwrap();
    assert!(gx.normal_form(&r.parse("x^2").unwrap()).unwrap().is_zero());
    assert_eq!(gx.normal_form(&r.parse("y").unwrap()).unwrap(), r.parse("y").unwrap());
    let g = GroebnerBasis::compute(&r, &[r.parse("x^2 - y^2").unwrap()], r.grevlex()).unwrap();
    let nf = g.normal_form(&r.parse("x^2*y + y^3").unwrap()).unwrap();
    assert_eq!(nf, r.parse("2*y^3").unwrap());

    let q = Ring::new(Rationals, &["x", "y"]).unwrap();
    let g = GroebnerBasis::compute(&q, &[q.parse("x^2 - y^2").unwrap()], q.grevlex()).unwrap();
    assert_eq!(g.normal_form(&q.parse("x^2*y + y^3").unwrap()).unwrap(), q.parse("2*y^3").unwrap());
}

#[test]
fn buchberger_examples() {
    let r = ring(&["x", "y"]);
    let g = GroebnerBasis::compute(&r, &r.parse_list("x, y").unwrap(), r.grevlex()).unwrap();
    assert_eq!(g.len(), 2);

    let b = Ring::with_grading(PrimeField::default(), &["x", "y", "T1", "T2"], &[1; 4], 2, GbLimits::default()).unwrap();
    let f = b.parse("x*T2 - y*T1").unwrap();
    let g = GroebnerBasis::compute(&b, std::slice::from_ref(&f), b.grevlex()).unwrap();
    assert_eq!(g.polys(), vec![f.monic()]);

    let r = ring(&["x", "y", "z"]);
    let lex = r.order(OrderKind::Lex);
    let g = GroebnerBasis::compute(&r, &r.parse_list("x^2 - y, x^3 - z").unwrap(), lex).unwrap();
    assert!(g.verify().unwrap());
    let yz: Vec<_> = g.free_of(&[0]);
    assert!(!yz.is_empty());
    // y^3 - z^2 generates the elimination ideal.
    let target = r.parse("y^3 - z^2").unwrap();
    assert!(yz.iter().any(|p| p.monic() == target.monic()));
}

#[test]
fn membership_examples() {
    let r = ring(&["x", "y"]);
    assert!(ideal(&r, "x").contains(&r.parse("x^2").unwrap()).unwrap());
    assert!(!ideal(&r, "x, y").contains(&r.one()).unwrap());

    let r4 = ring(&["x", "y", "z", "w"]);
    let j = ideal(&r4, "x^2, y^2, z^2, w^2");
    let a = r4.parse("x*y + x*z + x*w + y*z").unwrap();
    let ja = j.quotient_poly(&a).unwrap();
    for g in ja.gens() {
        assert!(j.contains(&g.try_mul(&a).unwrap()).unwrap());
    }
}

#[test]
fn equality_examples() {
    let r = ring(&["x", "y"]);
    assert!(ideal(&r, "x, y").equals(&ideal(&r, "y, x + y")).unwrap());
    assert!(!ideal(&r, "x^2").equals(&ideal(&r, "x")).unwrap());
}

#[test]
fn quotient_examples() {
    let r = ring(&["x", "y"]);
    let x = r.parse("x").unwrap();
    let y = r.parse("y").unwrap();
    assert!(ideal(&r, "x^2").quotient_poly(&x).unwrap().equals(&ideal(&r, "x")).unwrap());
    assert!(ideal(&r, "x").quotient_poly(&y).unwrap().equals(&ideal(&r, "x")).unwrap());
    assert!(ideal(&r, "x").quotient(&ideal(&r, "x, y")).unwrap().equals(&ideal(&r, "x")).unwrap());

    let soc = ideal(&r, "x^2, y^2").quotient(&ideal(&r, "x, y")).unwrap();
    assert!(soc.equals(&ideal(&r, "x^2, y^2, x*y")).unwrap());
    for m in monomials_of_degree(2, 2) {
        let f = r.monomial(m);
        assert!(soc.contains(&f).unwrap());
    }
    assert!(!soc.contains(&x).unwrap());
}

#[test]
fn gorenstein_duality_on_quaternary_example() {
    let r = ring(&["x", "y", "z", "w"]);
    let j = ideal(&r, "x^2, y^2, z^2, w^2");
    let a = r.parse("x*y + x*z + x*w + y*z").unwrap();
    let ja = j.quotient_poly(&a).unwrap();
    let back = j.quotient(&ja).unwrap();
    let i = j.sum(&Ideal::new(&r, vec![a]).unwrap()).unwrap();
    assert!(back.equals(&i).unwrap());
}

#[test]
fn intersection_examples() {
    let r = ring(&["x", "y"]);
    assert!(ideal(&r, "x").intersect(&ideal(&r, "y")).unwrap().equals(&ideal(&r, "x*y")).unwrap());
    let i = ideal(&r, "x^2 + y, x*y");
    assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
    let meet = ideal(&r, "x, y").intersect(&ideal(&r, "x^2, y")).unwrap();
    assert!(meet.equals(&ideal(&r, "x^2, y, x*y")).unwrap());
    for d in 1..5 {
        for m in monomials_of_degree(2, d) {
            let f = r.monomial(m);
            let expect = oracle_member(&r, ideal(&r, "x, y").gens(), &f)
                && oracle_member(&r, ideal(&r, "x^2, y").gens(), &f);
            assert_eq!(meet.contains(&f).unwrap(), expect, "{f}");
        }
    }
}

#[test]
fn eliminate_examples() {
    let b = Ring::new(PrimeField::default(), &["x", "y", "T1", "T2", "t"]).unwrap();
    let i = ideal(&b, "T1 - x*t, T2 - y*t");
    let e = i.eliminate(&[4]).unwrap();
    assert!(e.equals(&ideal(&b, "x*T2 - y*T1")).unwrap());

    let b = Ring::new(PrimeField::default(), &["x", "T", "t"]).unwrap();
    let e = ideal(&b, "T - x*t").eliminate(&[2]).unwrap();
    assert!(e.is_zero() || e.gb().unwrap().is_empty());
}

#[test]
fn saturation_matches_iterated_quotient() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, "x^2*y, x*y^2*z, y^3*z^2");
    let a = i.saturate_variable(1).unwrap();
    let b = i.saturate(&ideal(&r, "y")).unwrap();
    assert!(a.equals(&b).unwrap());
    assert!(a.equals(&ideal(&r, "x^2, x*z, z^2")).unwrap());
}

#[test]
fn power_examples() {
    let r = ring(&["x", "y"]);
    let m = ideal(&r, "x, y");
    let m2 = m.power(2).unwrap();
    assert_eq!(m2.len(), 3);
    assert!(m2.equals(&ideal(&r, "x^2, x*y, y^2")).unwrap());
    assert!(m.power(1).unwrap().equals(&m).unwrap());
}

#[test]
fn syzygy_examples() {
    let r = ring(&["x", "y"]);
    let phi = syzygies(&r, &r.parse_list("x, y").unwrap()).unwrap();
    assert_eq!(phi.ncols(), 1);
    let col = &phi.columns()[0];
    let c = col[1].lc();
    let expect = vec![r.parse("-y").unwrap().scale(c), r.parse("x").unwrap().scale(c)];
    assert_eq!(col, &expect);
    assert!(i1(&phi).unwrap().equals(&ideal(&r, "x, y")).unwrap());

    let r = ring(&["x", "y", "z"]);
    let phi = syzygies(&r, &r.parse_list("x*y*z, x^3, y^3, z^3").unwrap()).unwrap();
    assert!(phi.is_exact().unwrap());
    let m2 = ideal(&r, "x, y, z").power(2).unwrap();
    assert!(i1(&phi).unwrap().equals(&m2).unwrap());
}

#[test]
fn syzygy_columns_are_minimal() {
    let r = ring(&["x", "y", "z"]);
    let forms = r.parse_list("x^2, y^2, z^2, x*y + y*z").unwrap();
    let phi = syzygies(&r, &forms).unwrap();
    // Koszul syzygies among the first three plus whatever the fourth adds;
    // no column is generated by the others.
    assert!(phi.is_exact().unwrap());
    let cols = phi.columns();
    for k in 0..cols.len() {
        let others: Vec<&Vec<Polynomial<PrimeField>>> = cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, c)| c).collect();
        assert!(!module_member(&r, &others, &cols[k]), "column {k} redundant");
    }
}

/// Module membership for homogeneous columns, by the oracle on a tagged ring.
fn module_member(
    r: &RingRef<PrimeField>,
    others: &[&Vec<Polynomial<PrimeField>>],
    col: &[Polynomial<PrimeField>],
) -> bool {
    let n = r.nvars();
    let m = col.len();
    let mut names: Vec<String> = r.names().to_vec();
    names.extend((0..m).map(|i| format!("tag{i}")));
    let big = Ring::new(PrimeField::default(), &names).unwrap();
    let up: Vec<usize> = (0..n).collect();
    // Entry degrees are aligned by the homogeneous syzygy structure, so we
    // shift each slot by a uniform tag and compare in total degree.
    let embed = |c: &[Polynomial<PrimeField>]| {
        let mut acc = big.zero();
        for (i, p) in c.iter().enumerate() {
            if !p.is_zero() {
                let lifted = p.map_vars(&big, &up);
                acc = acc.try_add(&lifted.try_mul(&big.var(n + i)).unwrap()).unwrap();
            }
        }
        acc
    };
    let gens: Vec<_> = others.iter().map(|c| embed(c)).collect();
    oracle_member(&big, &gens, &embed(col))
}

#[test]
fn minimal_generators_examples() {
    let r = ring(&["x", "y"]);
    let mg = ideal(&r, "x, x^2, y").minimal_generators().unwrap();
    assert_eq!(mg, r.parse_list("x, y").unwrap());
    assert!(ideal(&r, "x + y^2").minimal_generators().is_err());
}

fn arb_form(nvars: usize, deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    let mons = monomials_of_degree(nvars, deg);
    prop::collection::vec((0..mons.len(), -3i64..=3), 1..4).prop_map(move |v| {
        v.into_iter().map(|(i, c)| (mons[i].to_vec(nvars), c)).collect()
    })
}

fn build(r: &RingRef<PrimeField>, spec: &[(Vec<u32>, i64)]) -> Polynomial<PrimeField> {
    let f = *r.field();
    Polynomial::from_terms(
        r,
        spec.iter().map(|(e, c)| (Monomial::from_exponents(e).unwrap(), f.from_int(*c))).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gb_membership_agrees_with_linear_algebra(
        degs in prop::collection::vec(1u32..=3, 1..4),
        seeds in prop::collection::vec(arb_form(3, 1), 0..1),
        g1 in arb_form(3, 1), g2 in arb_form(3, 2), g3 in arb_form(3, 3),
        probe_deg in 2u32..=4,
        probe in prop::collection::vec((0usize..15, -3i64..=3), 1..5),
    ) {
        let _ = seeds;
        let r = ring(&["x", "y", "z"]);
        let pool = [g1, g2, g3];
        let gens: Vec<_> = degs.iter().map(|&d| build(&r, &pool[(d - 1) as usize])).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let i = Ideal::new(&r, gens.clone()).unwrap();
        prop_assert!(i.gb().unwrap().verify().unwrap());
        let mons = monomials_of_degree(3, probe_deg);
        let f = Polynomial::from_terms(&r, probe.iter().map(|&(k, c)| (mons[k % mons.len()], r.field().from_int(c))).collect());
        prop_assume!(!f.is_zero());
        prop_assert_eq!(i.contains(&f).unwrap(), oracle_member(&r, &gens, &f));
        // Some element of the ideal is always recognized.
        let member = gens[0].try_mul(&f).unwrap();
        prop_assert!(i.contains(&member).unwrap());
        prop_assert!(oracle_member(&r, &gens, &member));
    }

    #[test]
    fn quotient_laws(g1 in arb_form(3, 2), g2 in arb_form(3, 2), f in arb_form(3, 1), g in arb_form(3, 1)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<_> = [g1, g2].iter().map(|s| build(&r, s)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let (f, g) = (build(&r, &f), build(&r, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let i = Ideal::new(&r, gens).unwrap();
        let q = i.quotient_poly(&f).unwrap();
        prop_assert!(i.contains_ideal(&q.scale(&f).unwrap()).unwrap());
        prop_assert!(q.contains_ideal(&i).unwrap());
        let lhs = q.quotient_poly(&g).unwrap();
        let rhs = i.quotient_poly(&f.try_mul(&g).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn elimination_soundness(g1 in arb_form(3, 2), g2 in arb_form(3, 2), g3 in arb_form(3, 1)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<_> = [g1, g2, g3].iter().map(|s| build(&r, s)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let i = Ideal::new(&r, gens).unwrap();
        let e = i.eliminate(&[0]).unwrap();
        for p in e.gens() {
            prop_assert!(p.terms().iter().all(|(m, _)| m.exp(0) == 0));
            prop_assert!(i.contains(p).unwrap());
        }
    }

    #[test]
    fn minimal_generator_count_is_permutation_invariant(
        forms in prop::collection::vec(arb_form(3, 2), 2..6),
        rot in 0usize..6,
    ) {
        let r = ring(&["x", "y", "z"]);
        let mut gens: Vec<_> = forms.iter().map(|s| build(&r, s)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let a = Ideal::new(&r, gens.clone()).unwrap().minimal_generators().unwrap().len();
        let k = rot % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        let b = Ideal::new(&r, gens).unwrap().minimal_generators().unwrap().len();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn syzygy_columns_annihilate(forms in prop::collection::vec(arb_form(3, 2), 2..5)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<_> = forms.iter().map(|s| build(&r, s)).filter(|p| !p.is_zero()).collect();
        prop_assume!(gens.len() >= 2);
        let phi = syzygies(&r, &gens).unwrap();
        prop_assert!(phi.is_exact().unwrap());
    }
}
