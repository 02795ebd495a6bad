//! Property tests for the rewriting engine and the free-algebra arithmetic.

mod common;

use common::*;
use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::freealg::{NcPoly, Word};
use hopfcalc_core::hopf::catalog::{AlgebraName, PqPreset};
use hopfcalc_core::hopf::HopfPresentation;
use proptest::prelude::*;

fn atilde() -> HopfPresentation {
    build(AlgebraName::Atilde, &FieldSpec::Cyclotomic3, PqPreset::Zero)
}

fn arb_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..5, 0..6).prop_map(|ls| Word::from_letters(&ls))
}

fn arb_poly() -> impl Strategy<Value = NcPoly> {
    proptest::collection::vec((arb_word(), -4i64..5), 1..5).prop_map(|terms| {
        let spec = FieldSpec::Cyclotomic3;
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, spec.integer(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normal_form_is_idempotent(w in arb_word()) {
        let h = atilde();
        let spec = FieldSpec::Cyclotomic3;
        let nf = h.normal_form(&NcPoly::word(w, &spec));
        prop_assert_eq!(h.normal_form(&nf), nf);
    }

    #[test]
    fn normal_form_is_multiplicative(u in arb_word(), v in arb_word()) {
        let h = atilde();
        let spec = FieldSpec::Cyclotomic3;
        let pu = NcPoly::word(u, &spec);
        let pv = NcPoly::word(v, &spec);
        let direct = h.normal_form(&pu.multiply(&pv));
        let staged = h.normal_form(&h.normal_form(&pu).multiply(&h.normal_form(&pv)));
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn normal_form_is_linear(f in arb_poly(), g in arb_poly()) {
        let h = atilde();
        let lhs = h.normal_form(&f.add(&g));
        let rhs = h.normal_form(&h.normal_form(&f).add(&h.normal_form(&g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_order_is_multiplicative(
        a in arb_word(), b in arb_word(), u in arb_word(), v in arb_word()
    ) {
        use core::cmp::Ordering;
        let h = atilde();
        let order = h.system().order();
        if order.cmp(&a, &b) == Ordering::Less {
            let left = u.concat(&a).concat(&v);
            let right = u.concat(&b).concat(&v);
            prop_assert_eq!(order.cmp(&left, &right), Ordering::Less);
        }
    }

    #[test]
    fn multiplication_is_associative(
        f in arb_poly(), g in arb_poly(), k in arb_poly()
    ) {
        let lhs = f.multiply(&g).multiply(&k);
        let rhs = f.multiply(&g.multiply(&k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_distributes(f in arb_poly(), g in arb_poly(), k in arb_poly()) {
        let lhs = f.multiply(&g.add(&k));
        let rhs = f.multiply(&g).add(&f.multiply(&k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_words_are_irreducible(max in 0u64..6) {
        let h = atilde();
        for w in h.basis_words(max).words {
            prop_assert!(h.system().is_irreducible(&w));
            prop_assert!(h.word_weight(&w) <= max);
        }
    }

    #[test]
    fn counit_is_an_algebra_map(u in arb_word(), v in arb_word()) {
        let h = atilde();
        let spec = FieldSpec::Cyclotomic3;
        let pu = NcPoly::word(u, &spec);
        let pv = NcPoly::word(v, &spec);
        let lhs = h.counit(&pu.multiply(&pv)).unwrap();
        let rhs = h.counit(&pu).unwrap().mul(&h.counit(&pv).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_an_algebra_map(u in arb_word(), v in arb_word()) {
        let h = atilde();
        let spec = FieldSpec::Cyclotomic3;
        let pu = NcPoly::word(u, &spec);
        let pv = NcPoly::word(v, &spec);
        let lhs = h.coproduct(&pu.multiply(&pv)).unwrap();
        let du = h.coproduct(&pu).unwrap();
        let dv = h.coproduct(&pv).unwrap();
        let rhs = h.tensor_normal_form(&du.multiply(&dv).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
