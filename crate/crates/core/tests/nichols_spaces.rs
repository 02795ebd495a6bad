//! Nichols-algebra dimensions of the three skew-primitive components.

mod common;

use common::*;
use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::hopf::catalog::{AlgebraName, PqPreset};
use hopfcalc_core::nichols::{
    space_v1, space_v1_plus_vb, space_va_closed_form, space_va_derived, space_vb, BraidedTensor,
};

#[test]
fn derived_braiding_equals_closed_form() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let derived = space_va_derived(&h).unwrap();
    let closed = space_va_closed_form(&spec);
    assert_eq!(derived.braiding(), closed.braiding());
    assert!(derived.check_braid_equation());
}

#[test]
fn a_component_nichols_algebra_has_dimension_9() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let v = space_va_derived(&h).unwrap();
    let report = v.nichols_dims(6).unwrap();
    assert_eq!(report.ranks, vec![1, 2, 3, 2, 1, 0, 0]);
    assert_eq!(report.total, 9);
    assert!(report.terminated);
    assert!(!report.char_caveat);
    // a 10-element homogeneous basis is impossible: the Hilbert series sums to 9
    assert_ne!(report.total, 10);
}

#[test]
fn a_component_relations_lie_in_symmetrizer_kernels() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let v = space_va_derived(&h).unwrap();
    let one = spec.one();
    let u = 0usize;
    let w = 1usize;
    let relations = vec![
        // u³
        BraidedTensor::from_monomials(2, 3, &[(one.clone(), vec![u, u, u])], &spec),
        // v³
        BraidedTensor::from_monomials(2, 3, &[(one.clone(), vec![w, w, w])], &spec),
        // u²v + uvu + vu²
        BraidedTensor::from_monomials(
            2,
            3,
            &[
                (one.clone(), vec![u, u, w]),
                (one.clone(), vec![u, w, u]),
                (one.clone(), vec![w, u, u]),
            ],
            &spec,
        ),
        // u² + uv + v²
        BraidedTensor::from_monomials(
            2,
            2,
            &[
                (one.clone(), vec![u, u]),
                (one.clone(), vec![u, w]),
                (one.clone(), vec![w, w]),
            ],
            &spec,
        ),
    ];
    assert_eq!(
        v.check_relations_in_kernel(&relations).unwrap(),
        vec![true; 4]
    );
}

#[test]
fn b_component_is_an_exterior_line() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let v = space_vb(&h).unwrap();
    assert_eq!(v.dim(), 1);
    // conjugation by b negates y
    assert_eq!(*v.braiding().get(0, 0), spec.integer(-1));
    let report = v.nichols_dims(4).unwrap();
    assert_eq!(report.ranks, vec![1, 1, 0, 0, 0]);
    assert_eq!(report.total, 2);
}

#[test]
fn trivial_component_is_a_symmetric_plane() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let v = space_v1(&h).unwrap();
    assert_eq!(v.dim(), 2);
    let report = v.nichols_dims(4).unwrap();
    assert_eq!(report.ranks, vec![1, 2, 3, 4, 5]);
}

#[test]
fn direct_sum_ranks_factor_as_a_convolution() {
    let spec = FieldSpec::Cyclotomic3;
    let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero);
    let v1 = space_v1(&h).unwrap().nichols_dims(4).unwrap();
    let vb = space_vb(&h).unwrap().nichols_dims(4).unwrap();
    let sum = space_v1_plus_vb(&h).unwrap().nichols_dims(4).unwrap();
    for n in 0..=4 {
        let conv: usize = (0..=n).map(|i| v1.ranks[i] * vb.ranks[n - i]).sum();
        assert_eq!(sum.ranks[n], conv, "degree {n}");
    }
}

#[test]
fn positive_characteristic_flags_the_caveat() {
    let spec = FieldSpec::f7();
    use hopfcalc_core::nichols::BraidedVectorSpace;
    let v = BraidedVectorSpace::scaled_flip(1, 1, &spec);
    let report = v.nichols_dims(7).unwrap();
    // rank S_n on a trivially braided line is n!, and 7! ≡ 0 (mod 7)
    assert_eq!(report.ranks[6], 1);
    assert_eq!(report.ranks[7], 0);
    assert!(report.char_caveat);
}
