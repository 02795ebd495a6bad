//! Structural Hopf checks: bialgebra and antipode axioms, coideal and
//! Hopf-subalgebra certification, and the three negative controls.

mod common;

use common::*;
use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::freealg::NcPoly;
use hopfcalc_core::hopf::catalog::{self, AlgebraName, PqPreset, GA, GB, GF, GS, GT};
use hopfcalc_core::hopf::MinPolyResult;

#[test]
fn bialgebra_and_antipode_axioms_hold() {
    for spec in [FieldSpec::Cyclotomic3, FieldSpec::f7()] {
        for name in [AlgebraName::Atilde, AlgebraName::A] {
            let h = build(name, &spec, PqPreset::Zero);
            let bial = h.check_bialgebra().unwrap();
            assert!(bial.pass(), "{name:?}/{spec:?}: {:?}", bial.failures);
            let anti = h.check_antipode().unwrap();
            assert!(anti.pass(), "{name:?}/{spec:?}: {:?}", anti.failures);
        }
    }
}

#[test]
fn corrupted_presentations_fail_their_checks() {
    let spec = FieldSpec::Cyclotomic3;
    // dropped commutation rule breaks coproduct compatibility
    let bad_comm = catalog::corrupted_commutation(&spec).unwrap();
    let bial = bad_comm.check_bialgebra().unwrap();
    assert!(!bial.pass());
    // wrong antipode image of s breaks the convolution identity
    let bad_anti = catalog::corrupted_antipode(&spec).unwrap();
    let anti = bad_anti.check_antipode().unwrap();
    assert!(!anti.pass());
    // tampered rule breaks confluence
    let bad_sys = catalog::corrupted_confluence(&spec).unwrap();
    let report = bad_sys.check_confluence();
    assert!(!report.is_confluent());
}

#[test]
fn coideal_subalgebra_on_s_t_passes() {
    for spec in fields() {
        let h = build(AlgebraName::A, &spec, PqPreset::Zero);
        let gens = vec![mono(&spec, &[GS]), mono(&spec, &[GT])];
        let rep = h.coideal_subalgebra_check(&gens, 8).unwrap();
        assert!(rep.pass(), "{spec:?}: {:?}", rep.failures);
        assert!(rep.subalgebra_dim > 1);
    }
}

#[test]
fn f_alone_is_not_a_coideal() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::A, &spec, PqPreset::Zero);
    let rep = h
        .coideal_subalgebra_check(&[mono(&spec, &[GF])], 8)
        .unwrap();
    assert!(!rep.pass());
}

#[test]
fn coradical_part_is_a_hopf_subalgebra_of_dim_18() {
    for spec in fields() {
        let h = build(AlgebraName::A, &spec, PqPreset::Zero);
        let rep = h.hopf_subalgebra_check(&[GA, GB, GF], 8).unwrap();
        assert!(rep.closed(), "{spec:?}");
        assert_eq!(rep.dimension, Some(18));
    }
}

#[test]
fn group_part_is_a_hopf_subalgebra_of_dim_3() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let rep = h.hopf_subalgebra_check(&[GA], 6).unwrap();
    assert!(rep.closed());
    assert_eq!(rep.dimension, Some(3));
}

#[test]
fn s_alone_is_not_delta_closed() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let rep = h.hopf_subalgebra_check(&[GS], 6).unwrap();
    assert!(!rep.closed());
    assert!(!rep.delta_failures.is_empty());
}

#[test]
fn f_power_independence_matches_the_quotient() {
    let spec = FieldSpec::Cyclotomic3;
    let f = mono(&spec, &[GF]);
    let h_a = build(AlgebraName::A, &spec, PqPreset::Zero);
    // F³ = 0 in A, no lower-degree combination vanishes
    let expect = vec![spec.zero(), spec.zero(), spec.zero(), spec.one()];
    match h_a.min_poly(&f, 4).unwrap() {
        MinPolyResult::Poly(c) => assert_eq!(c, expect),
        other => panic!("expected t³, got {other:?}"),
    }
    let h_t = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    assert_eq!(
        h_t.min_poly(&f, 4).unwrap(),
        MinPolyResult::IndependentUpTo(4)
    );
}

#[test]
fn nodal_cubic_relation_at_both_presets() {
    for preset in [PqPreset::Zero, PqPreset::SixThree] {
        let spec = FieldSpec::Cyclotomic3;
        let h = build(AlgebraName::Atilde, &spec, preset);
        let a = mono(&spec, &[GA]);
        let b = mono(&spec, &[GB]);
        let x = alias(&h, "x");
        let y = alias(&h, "y");
        // (y + pb)² = (x + qa)² + (x + qa)³
        let s = x.add(&a.scaled(h.q()));
        let t = y.add(&b.scaled(h.p()));
        let s2 = s.multiply(&s);
        let rhs = s2.add(&s2.multiply(&s));
        assert!(h.verify_identity(&t.multiply(&t), &rhs));
        // parameter constraint p² = q² + q³
        let p = h.p().clone();
        let q = h.q().clone();
        assert_eq!(p.mul(&p), q.mul(&q).add(&q.mul(&q).mul(&q)));
    }
}

#[test]
fn counits_and_antipode_samples() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    for (gen, value) in [(GA, 1), (GB, 1), (GF, 0), (GS, 0), (GT, 0)] {
        assert_eq!(
            h.counit(&h.generator_poly(gen)).unwrap(),
            spec.integer(value)
        );
    }
    // S(a) = a², S(b) = b
    let a2 = mono(&spec, &[GA, GA]);
    assert_eq!(h.antipode(&mono(&spec, &[GA])).unwrap(), a2);
    assert_eq!(h.antipode(&mono(&spec, &[GB])).unwrap(), mono(&spec, &[GB]));
    // S is an algebra antihomomorphism on a sample: S(st) = S(t)S(s)
    let s = mono(&spec, &[GS]);
    let t = mono(&spec, &[GT]);
    let lhs = h.antipode(&s.multiply(&t)).unwrap();
    let rhs = h
        .normal_form(&h.antipode(&t).unwrap().multiply(&h.antipode(&s).unwrap()));
    assert_eq!(lhs, rhs);
}

#[test]
fn identity_check_rejects_false_statements() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let s = mono(&spec, &[GS]);
    let a = mono(&spec, &[GA]);
    assert!(!h.verify_identity(&s.multiply(&a), &a.multiply(&s)));
    assert!(!h.is_central(&s));
    assert!(!h.is_central(&NcPoly::word(
        hopfcalc_core::freealg::Word::generator(GF),
        &spec
    )));
}
