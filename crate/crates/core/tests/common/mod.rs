#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Mutex;

use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rees_core::groebner::syzygies;
use rees_core::hilbert::colength;
use rees_core::rees::{analyze, AnalyzeOptions, ReesReport};
use rees_core::*;

pub type Fp = PrimeField;
const P: u64 = 32003;

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Monomial::from_exponents(cur).unwrap());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, 0, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens` by
/// row reduction of the Macaulay matrix in degree `deg f`, mod 32003.
pub fn macaulay_member(r: &RingRef<Fp>, gens: &[Polynomial<Fp>], f: &Polynomial<Fp>) -> bool {
    if f.is_zero() {
        return true;
    }
    let d = f.degree();
    let cols = monomials_of_degree(r.nvars(), d);
    let idx = |m: &Monomial| cols.iter().position(|c| c == m).unwrap();
    let dense = |terms: &[(Monomial, u32)]| {
        let mut v = vec![0u64; cols.len()];
        for (m, c) in terms {
            let k = idx(m);
            v[k] = (v[k] + *c as u64) % P;
        }
        v
    };
    let inv = |a: u64| {
        let (mut acc, mut b, mut e) = (1u64, a, P - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        acc
    };
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |v: &mut Vec<u64>, pivots: &Vec<(usize, Vec<u64>)>| {
        for (lead, b) in pivots {
            let c = v[*lead];
            if c != 0 {
                for k in 0..v.len() {
                    v[k] = (v[k] + P * P - c * b[k] % P) % P;
                }
            }
        }
    };
    for g in gens {
        if g.is_zero() || g.degree() > d {
            continue;
        }
        for m in monomials_of_degree(r.nvars(), d - g.degree()) {
            let row: Vec<(Monomial, u32)> = g.terms().iter().map(|(gm, c)| (gm.mul(&m), *c)).collect();
            let mut v = dense(&row);
            reduce(&mut v, &pivots);
            if let Some(lead) = v.iter().position(|&x| x != 0) {
                let s = inv(v[lead]);
                v.iter_mut().for_each(|x| *x = *x * s % P);
                for (_, b) in pivots.iter_mut() {
                    let c = b[lead];
                    if c != 0 {
                        for k in 0..b.len() {
                            b[k] = (b[k] + P * P - c * v[k] % P) % P;
                        }
                    }
                }
                pivots.push((lead, v));
            }
        }
    }
    let mut v = dense(f.terms());
    reduce(&mut v, &pivots);
    v.iter().all(|&x| x == 0)
}

pub fn random_form<R: Rng>(rng: &mut R, r: &RingRef<Fp>, deg: u32, density: f64) -> Polynomial<Fp> {
    let mut f = r.zero();
    for m in monomials_of_degree(r.nvars(), deg) {
        if rng.gen_bool(density) {
            let c = rng.gen_range(-3i64..=3);
            f = f.try_add(&r.monomial(m).scale(&r.field().from_int(c))).unwrap();
        }
    }
    f
}

/// A random almost complete intersection `I = (J, a)` with `J` an m-primary
/// complete intersection of `d` forms of degree `n`, `a ∉ J` of degree `n`.
pub struct RandomAci {
    pub ring: RingRef<Fp>,
    pub j: Vec<Polynomial<Fp>>,
    pub a: Polynomial<Fp>,
}

impl RandomAci {
    pub fn ideal(&self) -> Vec<Polynomial<Fp>> {
        let mut i = self.j.clone();
        i.push(self.a.clone());
        i
    }
}

pub fn random_aci<R: Rng>(rng: &mut R, d: usize, n: u32) -> RandomAci {
    let names: Vec<&str> = ["x", "y", "z"][..d].to_vec();
    let limits = GbLimits {
        max_reductions: 200_000,
        timeout: None,
    };
    let ring = Ring::with_grading(PrimeField::default(), &names, &vec![1; d], d, limits).unwrap();
    loop {
        let density = rng.gen_range(0.3..0.9);
        let j: Vec<_> = (0..d).map(|_| random_form(rng, &ring, n, density)).collect();
        if j.iter().any(|f| f.is_zero()) {
            continue;
        }
        let jj = Ideal::new(&ring, j.clone()).unwrap();
        match colength(&jj) {
            Ok(l) if l == (n as u64).pow(d as u32) => {}
            _ => continue,
        }
        let a = random_form(rng, &ring, n, density);
        if a.is_zero() || jj.contains(&a).unwrap() {
            continue;
        }
        return RandomAci { ring, j, a };
    }
}

/// Checks every consistency law on one instance; returns the violations.
pub fn consistency_violations<R: Rng>(rng: &mut R, inst: &RandomAci) -> (Vec<String>, Option<ReesReport>) {
    let mut bad = Vec::new();
    let opts = AnalyzeOptions {
        skip_sdeg: true,
        ..AnalyzeOptions::default()
    };
    let i_gens = inst.ideal();
    let rep: ReesReport = analyze(&inst.ring, &i_gens, &inst.j, &opts);
    let label = format!("I = {:?}", rep.ideal);
    for e in &rep.errors {
        bad.push(format!("{label}: stage {} failed: {}", e.stage, e.message));
    }
    let (Some(fs), Some(e1), Some(l1)) = (&rep.f_sequence, rep.e1, rep.colength_i1_phi) else {
        bad.push(format!("{label}: incomplete report"));
        return (bad, Some(rep));
    };
    // f-sequence monotonicity and positivity.
    if fs.contains(&0) || fs.windows(2).any(|w| w[0] < w[1]) {
        bad.push(format!("{label}: f-sequence {fs:?} not non-increasing"));
    }
    let f = |k: usize| fs.get(k - 1).copied().unwrap_or(0);
    // Direct f_1, f_2 from powers.
    let ring = &inst.ring;
    let i = Ideal::new(ring, i_gens.clone()).unwrap();
    let j = Ideal::new(ring, inst.j.clone()).unwrap();
    let ji = j.product(&i).unwrap();
    let i2 = i.power(2).unwrap();
    let f1 = colength(&j).unwrap() - colength(&i).unwrap();
    let f2 = colength(&ji).unwrap() - colength(&i2).unwrap();
    if (f1, f2) != (f(1), f(2)) {
        bad.push(format!("{label}: direct (f1, f2) = ({f1}, {f2}) vs {fs:?}"));
    }
    // f_2 = f_1 - λ(R/I_1(φ)).
    if f2 as i64 != f1 as i64 - l1 as i64 {
        bad.push(format!("{label}: f2 = {f2}, f1 = {f1}, colength I1 = {l1}"));
    }
    // red ≤ 1 iff J : a = I_1(φ).
    let ja = j.quotient_poly(&inst.a).unwrap();
    let phi = syzygies(ring, &i_gens).unwrap();
    let i1 = rees_core::groebner::i1(&phi).unwrap();
    let red_le_1 = fs.len() <= 1;
    if red_le_1 != ja.equals(&i1).unwrap() {
        bad.push(format!("{label}: red <= 1 is {red_le_1} but J:a = I1(phi) is {}", !red_le_1));
    }
    if i2.equals(&ji).unwrap() != red_le_1 {
        bad.push(format!("{label}: I^2 = JI disagrees with the f-sequence"));
    }
    // e1 never exceeds the sum of the f-sequence.
    let sum: u64 = fs.iter().sum();
    if e1 > sum as i64 {
        bad.push(format!("{label}: e1 = {e1} > sum f = {sum}"));
    }
    // Groebner membership against the Macaulay matrix oracle.
    let n = inst.a.degree();
    for _ in 0..4 {
        let deg = n + rng.gen_range(0..=2);
        let mut member = ring.zero();
        for g in &i_gens {
            let c = random_form(rng, ring, deg - n, 0.5);
            member = member.try_add(&c.try_mul(g).unwrap()).unwrap();
        }
        let other = random_form(rng, ring, deg, 0.3);
        for h in [member, other] {
            let gb = i.contains(&h).unwrap();
            let oracle = macaulay_member(ring, &i_gens, &h);
            if gb != oracle {
                bad.push(format!("{label}: membership of {h}: GB {gb}, oracle {oracle}"));
            }
        }
    }
    (bad, Some(rep))
}


/// Runs the consistency laws on `cases` random instances drawn from a fixed
/// seed. Returns instance counts keyed by `(red, aCM)`.
pub fn run_suite(cases: u32) -> std::result::Result<BTreeMap<(u32, bool), usize>, String> {
    let tally = Mutex::new(BTreeMap::new());
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]);
    let mut runner = TestRunner::new_with_rng(config, rng);
    let strategy = (2usize..=3, 2u32..=3, proptest::num::u64::ANY);
    runner
        .run(&strategy, |(d, n, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = random_aci(&mut rng, d, n);
            let (bad, rep) = consistency_violations(&mut rng, &inst);
            if let Some(rep) = rep {
                if let (Some(red), Some(acm)) = (rep.red, rep.acm) {
                    *tally.lock().unwrap().entry((red, acm)).or_insert(0) += 1;
                }
            }
            proptest::prop_assert!(bad.is_empty(), "{}", bad.join("\n"));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(tally.into_inner().unwrap())
}

