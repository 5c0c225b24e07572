use super::*;
use crate::arith::PrimeField;
use crate::hilbert::HVector;

fn quaternary_ring() -> RingRef<PrimeField> {
    Ring::new(PrimeField::default(), &["x", "y", "z", "w"]).unwrap()
}

#[test]
fn monomial_family_shapes() {
    let m = monomial_aci(PrimeField::default(), GbLimits::default(), &[3, 3, 3], &[1, 1, 1]).unwrap();
    let i = Ideal::new(&m.ring, m.i.clone()).unwrap();
    assert!(i.equals(&Ideal::parse(&m.ring, "x*y*z, x^3, y^3, z^3").unwrap()).unwrap());
    assert!(!m.strong_hypothesis);

    let m = monomial_aci(PrimeField::default(), GbLimits::default(), &[4, 4, 4], &[1, 1, 1]).unwrap();
    assert!(m.strong_hypothesis);
    let i = Ideal::new(&m.ring, m.i.clone()).unwrap();
    let q = Ideal::new(&m.ring, m.q.clone()).unwrap();
    assert_eq!(reduction_number(&i, &q, 8).unwrap(), 2);

    assert!(monomial_aci(PrimeField::default(), GbLimits::default(), &[2, 2, 2], &[1, 1, 1]).is_err());
}

#[test]
fn unequal_powers_use_a_weighted_grading() {
    let m = monomial_aci(PrimeField::default(), GbLimits::default(), &[4, 5, 6], &[1, 1, 1]).unwrap();
    assert_eq!(m.ring.weights(), &[15, 12, 10]);
    assert!(m.q.iter().all(|f| f.is_homogeneous()));
}

#[test]
fn candidate_list_needs_n_at_least_three() {
    assert!(mono_rees_candidate(2).is_err());
    assert_eq!(mono_rees_candidate(5).unwrap().len(), 10);
    assert_eq!(mono_rees_candidate(5).unwrap()[9], "x^2*y^2*z^2*u^3 - T1*T2*T3");
}

#[test]
fn quaternary_hilbert_functions() {
    let r = quaternary_ring();
    let cases = [(HfTag::Hf141, vec![1, 4, 1]), (HfTag::Hf131, vec![1, 3, 1]), (HfTag::Hf121, vec![1, 2, 1])];
    for (tag, hv) in cases {
        let (j, a) = quaternary_example(&r, tag).unwrap();
        let c = classify_hf(&Ideal::new(&r, j).unwrap(), &a).unwrap();
        assert_eq!(c.h_vector, HVector(hv));
        assert!(c.allowed && c.birational_compatible);
    }
    assert!("hf999".parse::<HfTag>().is_err());
}

#[test]
fn classifier_flags_and_errors() {
    let r = quaternary_ring();
    let j = Ideal::parse(&r, "x^2, y^2, z^2, w^2").unwrap();
    // J : xy = (x, y, z^2, w^2)
    let c = classify_hf(&j, &r.parse("x*y").unwrap()).unwrap();
    assert_eq!(c.h_vector, HVector(vec![1, 2, 1]));
    let c = classify_hf(&j, &r.parse("x*y + z*w").unwrap()).unwrap();
    assert_eq!(c.h_vector, HVector(vec![1, 4, 1]));
    assert!(classify_hf(&j, &r.parse("x^2").unwrap()).is_err());
    assert!(classify_hf(&j, &r.parse("x").unwrap()).is_err());
    let not_ci = Ideal::parse(&r, "x^2, x*y, z^2, w^2").unwrap();
    assert!(classify_hf(&not_ci, &r.parse("y*z").unwrap()).is_err());
}

#[test]
fn strings_with_three_ones_are_not_birational() {
    for hv in [vec![1, 1, 1], vec![1, 1, 1, 1], vec![1, 1, 1, 1, 1, 1], vec![1, 1], vec![1]] {
        let c = classify_h_vector(HVector(hv));
        assert!(c.allowed && !c.birational_compatible);
    }
    let c = classify_h_vector(HVector(vec![1, 2, 2, 1]));
    assert!(c.allowed && !c.birational_compatible);
    assert!(!classify_h_vector(HVector(vec![1, 5, 1])).allowed);
}

#[test]
fn northcott_example() {
    let r = quaternary_ring();
    let (v, a) = northcott_example_text();
    let vv: Vec<_> = v.iter().map(|s| r.parse(s).unwrap()).collect();
    let aa: Vec<Vec<_>> = a.iter().map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect()).collect();
    let (j, det) = northcott_ideal(&r, &vv, &aa).unwrap();
    let jj = Ideal::new(&r, j.clone()).unwrap();
    assert_eq!(colength(&jj).unwrap(), 16);
    let colon = jj.quotient_poly(&det).unwrap();
    let linked = jj.quotient(&colon).unwrap();
    let mut i = j.clone();
    i.push(det.clone());
    assert!(linked.equals(&Ideal::new(&r, i).unwrap()).unwrap());

    let mut degenerate = aa.clone();
    degenerate[3] = degenerate[2].clone();
    assert!(northcott_ideal(&r, &vv, &degenerate).is_err());
    let mut bad = vv.clone();
    bad[2] = r.parse("x^2").unwrap();
    assert!(northcott_ideal(&r, &bad, &aa).is_err());
}

#[test]
fn links() {
    let r = Ring::new(PrimeField::default(), &["x", "y", "z"]).unwrap();
    let j = Ideal::parse(&r, "x^2, y^2, z^2").unwrap();
    let i = link_ideal(&j, &Ideal::of_variables(&r, 0..3)).unwrap();
    assert!(i.equals(&Ideal::parse(&r, "x^2, y^2, z^2, x*y*z").unwrap()).unwrap());
    let lin = Ideal::parse(&r, "x, y").unwrap();
    assert!(link_ideal(&lin, &lin).unwrap().is_unit().unwrap());
    assert!(link_ideal(&Ideal::of_variables(&r, 0..3), &j).is_err());
}

#[test]
fn binary_ideals() {
    let r = Ring::new(PrimeField::default(), &["x", "y"]).unwrap();
    for n in 3..=6 {
        let m = binary_linear_matrix(&r, n).unwrap();
        let (i, j) = binary_ideal(&r, &m, 0).unwrap();
        assert_eq!(i.len(), 3);
        assert_eq!(j.len(), 2);
        assert!(i.iter().all(|f| f.degree() == n));
    }
    let degenerate = vec![
        r.parse_list("x, y").unwrap(),
        r.parse_list("x, y").unwrap(),
        r.parse_list("y, x").unwrap(),
    ];
    assert!(binary_ideal(&r, &degenerate, 0).is_err());
    let mixed = vec![
        r.parse_list("x, y^2").unwrap(),
        r.parse_list("y, x").unwrap(),
        r.parse_list("x, y^2").unwrap(),
    ];
    assert!(binary_ideal(&r, &mixed, 0).is_err());
}

#[test]
fn quadric_search_is_seeded() {
    let r = Ring::new(PrimeField::default(), &["x", "y"]).unwrap();
    let a = search_binary_quadrics(&r, 7, 3, 200).unwrap();
    let b = search_binary_quadrics(&r, 7, 3, 200).unwrap();
    assert_eq!(a.attempts, b.attempts);
    assert_eq!(a.matrix, b.matrix);
    let (i, _) = binary_ideal(&r, &a.matrix, 0).unwrap();
    assert_eq!(colength(&Ideal::new(&r, i).unwrap()).unwrap(), 12);
}

#[test]
fn family_spec_round_trips_as_json() {
    let specs = [
        FamilySpec::MonomialAci { params: vec![3, 3, 3, 1, 1, 1] },
        FamilySpec::BinaryMatrix { matrix: BinaryMatrix::Linear { n: 4 } },
        FamilySpec::QuaternaryExample { tag: HfTag::Hf131 },
        FamilySpec::Northcott { v: None, a: None },
        FamilySpec::Link { vars: vec!["x".into(), "y".into()], j: vec!["x^2".into(), "y^2".into()], k: None },
    ];
    for s in specs {
        let text = serde_json::to_string(&s).unwrap();
        let back: FamilySpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        s.instantiate(PrimeField::default(), GbLimits::default()).unwrap();
    }
    let parsed: FamilySpec = serde_json::from_str(r#"{"name":"quaternary_example","tag":"hf141"}"#).unwrap();
    assert_eq!(parsed, FamilySpec::QuaternaryExample { tag: HfTag::Hf141 });
}
