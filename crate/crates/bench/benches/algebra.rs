use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rees_core::families::{FamilySpec, HfTag};
use rees_core::groebner::GroebnerBasis;
use rees_core::hilbert::colength;
use rees_core::rees::{analyze, AnalyzeOptions, ReesMethod, ReesPresentation};
use rees_core::*;

fn quaternary() -> (RingRef<PrimeField>, Vec<Polynomial<PrimeField>>) {
    let r = Ring::new(PrimeField::default(), &["x", "y", "z", "w"]).unwrap();
    let gens = r.parse_list("x^2, y^2, z^2, w^2, x*y + x*z + x*w + y*z").unwrap();
    (r, gens)
}

fn groebner(c: &mut Criterion) {
    let r = Ring::new(PrimeField::default(), &["x", "y", "z"]).unwrap();
    let cyclic = r.parse_list("x + y + z, x*y + y*z + z*x, x*y*z - 1").unwrap();
    c.bench_function("gb cyclic-3", |b| b.iter(|| GroebnerBasis::compute(&r, black_box(&cyclic), r.grevlex()).unwrap()));

    let dense = r.parse_list("x^3 + y^2*z - 2*x*z^2 + y, x^2*y - y^3 + z^3 - x, x*y*z + x^2*z - y^2*z + 3*z").unwrap();
    c.bench_function("gb dense cubics", |b| b.iter(|| GroebnerBasis::compute(&r, black_box(&dense), r.grevlex()).unwrap()));

    let (r4, gens) = quaternary();
    c.bench_function("colength quaternary aci", |b| {
        b.iter(|| colength(&Ideal::new(&r4, black_box(gens.clone())).unwrap()).unwrap())
    });
}

fn rees(c: &mut Criterion) {
    let (r, gens) = quaternary();
    let names = rees_core::rees::default_t_names(&r, gens.len(), true);
    let mut g = c.benchmark_group("rees ideal");
    g.sample_size(10);
    for (label, method) in [("elimination", ReesMethod::Elimination), ("saturation", ReesMethod::Saturation)] {
        g.bench_function(label, |b| b.iter(|| ReesPresentation::new(&r, black_box(&gens), &names, method).unwrap()));
    }
    g.finish();
}

fn families(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze");
    g.sample_size(10);
    let specs = [
        ("mono 3", FamilySpec::MonomialAci { params: vec![3, 3, 3, 1, 1, 1] }),
        ("mono 4 vars", FamilySpec::MonomialAci { params: vec![4, 4, 4, 4, 1, 1, 1, 1] }),
        ("quaternary hf141", FamilySpec::QuaternaryExample { tag: HfTag::Hf141 }),
    ];
    for (label, spec) in specs {
        let inst = spec.instantiate(PrimeField::default(), GbLimits::default()).unwrap();
        g.bench_function(label, |b| {
            b.iter(|| analyze(&inst.ring, &inst.ideal, &inst.reduction, &AnalyzeOptions::default()))
        });
    }
    let inst = FamilySpec::MonomialAci { params: vec![3, 3, 3, 1, 1, 1] }.instantiate(Rationals, GbLimits::default()).unwrap();
    g.bench_function("mono 3 over QQ", |b| {
        b.iter(|| analyze(&inst.ring, &inst.ideal, &inst.reduction, &AnalyzeOptions::default()))
    });
    g.finish();
}

criterion_group!(benches, groebner, rees, families);
criterion_main!(benches);
