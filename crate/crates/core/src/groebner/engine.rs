//! Buchberger's algorithm with Gebauer–Möller pair elimination and the sugar
//! selection strategy. Ties in sugar are broken first-in-first-out, with
//! S-pairs ahead of input generators of the same sugar so that homogeneous
//! inputs yield a minimal generating set as a by-product.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::time::Instant;

use super::bucket::GeoBucket;
use crate::arith::{Field, GbLimits, Monomial, MonomialOrder, Term};
use crate::error::{AlgebraError, Result};

pub(crate) struct Element<F: Field> {
    pub terms: Vec<Term<F>>,
    pub lm: Monomial,
    pub mask: u32,
    pub sugar: u32,
    pub active: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    alive: bool,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Job {
    Pair(usize),
    Generator(usize),
}

#[derive(PartialEq, Eq)]
struct Queued {
    sugar: u32,
    seq: u64,
    job: Job,
}

impl Ord for Queued {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |j: &Job| matches!(j, Job::Generator(_)) as u8;
        (self.sugar, rank(&self.job), self.seq).cmp(&(other.sugar, rank(&other.job), other.seq))
    }
}

impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default)]
pub struct GbStats {
    pub reductions: u64,
    pub zero_reductions: u64,
    pub pairs_created: u64,
    pub max_sugar: u32,
}

pub(crate) struct GbOutput<F: Field> {
    /// Reduced, monic, sorted ascending by leading monomial.
    pub basis: Vec<Vec<Term<F>>>,
    /// Indices of input generators that survived reduction, in processing
    /// order. A minimal generating set when the input is homogeneous.
    pub kept_generators: Vec<usize>,
    pub stats: GbStats,
}

pub(crate) struct Engine<'a, F: Field> {
    field: &'a F,
    order: MonomialOrder,
    weights: &'a [u16],
    limits: GbLimits,
    degree_bound: Option<u32>,
    elements: Vec<Element<F>>,
    pairs: Vec<Pair>,
    queue: BinaryHeap<Reverse<Queued>>,
    seq: u64,
    stats: GbStats,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(field: &'a F, order: MonomialOrder, weights: &'a [u16], limits: GbLimits) -> Self {
        Self {
            field,
            order,
            weights,
            limits,
            degree_bound: None,
            elements: Vec::new(),
            pairs: Vec::new(),
            queue: BinaryHeap::new(),
            seq: 0,
            stats: GbStats::default(),
        }
    }

    /// Ignore work above this sugar; yields a degree-truncated basis.
    pub fn with_degree_bound(mut self, bound: Option<u32>) -> Self {
        self.degree_bound = bound;
        self
    }


    fn sugar_of(&self, terms: &[Term<F>]) -> u32 {
        terms.iter().map(|(m, _)| m.weighted_degree(self.weights)).max().unwrap_or(0)
    }

    fn push(&mut self, sugar: u32, job: Job) {
        self.seq += 1;
        self.queue.push(Reverse(Queued {
            sugar,
            seq: self.seq,
            job,
        }));
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.elements
            .iter()
            .position(|e| e.active && e.mask & !mask == 0 && e.lm.divides(m))
    }

    /// Full reduction (head and tail) modulo the active elements.
    /// Returns the remainder and its sugar.
    fn reduce(&self, bucket: &mut GeoBucket<'_, F>, mut sugar: u32) -> Result<(Vec<Term<F>>, u32)> {
        let mut rem = Vec::new();
        while let Some((m, c)) = bucket.pop_leading() {
            match self.find_reducer(&m) {
                Some(k) => {
                    let e = &self.elements[k];
                    let shift = e.lm.quotient_of(&m);
                    sugar = sugar.max(e.sugar + shift.weighted_degree(self.weights));
                    let coeff = self.field.neg(&c);
                    bucket.add_scaled(&e.terms[1..], &shift, &coeff)?;
                }
                None => rem.push((m, c)),
            }
        }
        Ok((rem, sugar))
    }

    fn make_monic(&self, terms: &mut [Term<F>]) {
        if let Some((_, lc)) = terms.first() {
            if !self.field.is_one(lc) {
                let inv = self.field.inv(lc);
                for (_, c) in terms.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
    }

    /// Inserts a new monic element and updates the pair set.
    fn insert(&mut self, terms: Vec<Term<F>>, sugar: u32) {
        let lm = terms[0].0;
        let h = self.elements.len();
        // Criterion B on existing pairs.
        for p in self.pairs.iter_mut().filter(|p| p.alive) {
            if lm.divides(&p.lcm) {
                let li = self.elements[p.i].lm.lcm(&lm);
                let lj = self.elements[p.j].lm.lcm(&lm);
                if li != p.lcm && lj != p.lcm {
                    p.alive = false;
                }
            }
        }
        // Candidate new pairs (i, h).
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| (i, e.lm.lcm(&lm), e.lm.is_coprime(&lm)))
            .collect();
        // Criterion M: drop (i,h) when another lcm properly divides it.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && keep[b] && cands[b].1 != cands[a].1 && cands[b].1.divides(&cands[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut idx = 0;
        cands.retain(|_| {
            idx += 1;
            keep[idx - 1]
        });
        // Criterion F: one pair per lcm; a coprime member kills the group.
        let mut chosen: Vec<(usize, Monomial)> = Vec::new();
        let mut used = vec![false; cands.len()];
        for a in 0..cands.len() {
            if used[a] {
                continue;
            }
            let mut any_coprime = cands[a].2;
            for b in a + 1..cands.len() {
                if !used[b] && cands[b].1 == cands[a].1 {
                    used[b] = true;
                    any_coprime |= cands[b].2;
                }
            }
            if !any_coprime {
                chosen.push((cands[a].0, cands[a].1));
            }
        }
        // Older elements whose leading monomial is now redundant.
        let mask = lm.support_mask();
        for e in self.elements.iter_mut().filter(|e| e.active) {
            if mask & !e.mask == 0 && lm.divides(&e.lm) {
                e.active = false;
            }
        }
        self.elements.push(Element {
            terms,
            lm,
            mask,
            sugar,
            active: true,
        });
        for (i, lcm) in chosen {
            let ei = &self.elements[i];
            let s_i = ei.sugar + ei.lm.quotient_of(&lcm).weighted_degree(self.weights);
            let s_h = sugar + lm.quotient_of(&lcm).weighted_degree(self.weights);
            let pid = self.pairs.len();
            self.pairs.push(Pair {
                i,
                j: h,
                lcm,
                alive: true,
            });
            self.stats.pairs_created += 1;
            self.push(s_i.max(s_h), Job::Pair(pid));
        }
    }

    fn spoly(&self, p: &Pair, bucket: &mut GeoBucket<'_, F>) -> Result<()> {
        let (ei, ej) = (&self.elements[p.i], &self.elements[p.j]);
        bucket.add_scaled(&ei.terms[1..], &ei.lm.quotient_of(&p.lcm), &self.field.one())?;
        let minus = self.field.neg(&self.field.one());
        bucket.add_scaled(&ej.terms[1..], &ej.lm.quotient_of(&p.lcm), &minus)?;
        Ok(())
    }

    pub fn run(mut self, gens: &[Vec<Term<F>>]) -> Result<GbOutput<F>> {
        let start = Instant::now();
        for (k, g) in gens.iter().enumerate() {
            if !g.is_empty() {
                let s = self.sugar_of(g);
                self.push(s, Job::Generator(k));
            }
        }
        let mut kept = Vec::new();
        while let Some(Reverse(item)) = self.queue.pop() {
            if let Job::Pair(pid) = item.job {
                if !self.pairs[pid].alive {
                    continue;
                }
                self.pairs[pid].alive = false;
            }
            if let Some(b) = self.degree_bound {
                if item.sugar > b {
                    continue;
                }
            }
            self.stats.reductions += 1;
            self.stats.max_sugar = self.stats.max_sugar.max(item.sugar);
            if self.stats.reductions > self.limits.max_reductions {
                return Err(AlgebraError::ResourceBound(format!(
                    "Groebner basis exceeded {} reductions",
                    self.limits.max_reductions
                )));
            }
            if self.stats.reductions.is_multiple_of(64) {
                if let Some(t) = self.limits.timeout {
                    if start.elapsed() > t {
                        return Err(AlgebraError::ResourceBound(format!(
                            "Groebner basis exceeded the {:.0?} timeout",
                            t
                        )));
                    }
                }
            }
            let mut bucket = GeoBucket::new(self.field, self.order);
            match item.job {
                Job::Pair(pid) => {
                    let p = self.pairs[pid];
                    self.spoly(&p, &mut bucket)?;
                }
                Job::Generator(k) => bucket.add_descending(&gens[k]),
            }
            let (mut rem, sugar) = self.reduce(&mut bucket, item.sugar)?;
            if rem.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if let Job::Generator(k) = item.job {
                kept.push(k);
            }
            self.make_monic(&mut rem);
            self.insert(rem, sugar);
        }
        let basis = self.interreduce()?;
        Ok(GbOutput {
            basis,
            kept_generators: kept,
            stats: self.stats,
        })
    }

    fn interreduce(&mut self) -> Result<Vec<Vec<Term<F>>>> {
        let mut idx: Vec<usize> = (0..self.elements.len())
            .filter(|&i| self.elements[i].active)
            .collect();
        idx.sort_by(|&a, &b| self.order.cmp(&self.elements[a].lm, &self.elements[b].lm));
        let mut out = Vec::with_capacity(idx.len());
        for &i in &idx {
            let terms = &self.elements[i].terms;
            let mut bucket = GeoBucket::new(self.field, self.order);
            bucket.add_descending(&terms[1..]);
            self.elements[i].active = false;
            let (tail, _) = self.reduce(&mut bucket, 0)?;
            self.elements[i].active = true;
            let mut full = Vec::with_capacity(tail.len() + 1);
            full.push(self.elements[i].terms[0].clone());
            full.extend(tail);
            out.push(full);
        }
        Ok(out)
    }
}

/// Normal form of `f` modulo a list of monic polynomials (descending term
/// lists) under `order`. Full reduction.
pub(crate) fn normal_form<F: Field>(
    field: &F,
    order: MonomialOrder,
    basis: &[Vec<Term<F>>],
    f: &[Term<F>],
) -> Result<Vec<Term<F>>> {
    let masks: Vec<u32> = basis.iter().map(|g| g[0].0.support_mask()).collect();
    let mut bucket = GeoBucket::new(field, order);
    bucket.add_descending(f);
    let mut rem = Vec::new();
    while let Some((m, c)) = bucket.pop_leading() {
        let mask = m.support_mask();
        let hit = basis
            .iter()
            .zip(&masks)
            .position(|(g, &gm)| gm & !mask == 0 && g[0].0.divides(&m));
        match hit {
            Some(k) => {
                let g = &basis[k];
                let shift = g[0].0.quotient_of(&m);
                let coeff = field.neg(&field.div(&c, &g[0].1));
                bucket.add_scaled(&g[1..], &shift, &coeff)?;
            }
            None => rem.push((m, c)),
        }
    }
    Ok(rem)
}
