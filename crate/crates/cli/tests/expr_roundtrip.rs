//! Parse -> print -> parse returns an identical polynomial.

use hopfcalc::expr::{parse_expression, print_expression};
use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::freealg::{NcPoly, Word};
use hopfcalc_core::hopf::catalog::{build, AlgebraName, PqPreset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn random_elements_round_trip(
        terms in proptest::collection::vec(
            (proptest::collection::vec(0usize..5, 0..5), -9i64..10, -9i64..10),
            1..6,
        )
    ) {
        let spec = FieldSpec::Cyclotomic3;
        let h = build(AlgebraName::Atilde, &spec, PqPreset::Zero).unwrap();
        let r = spec.root().unwrap();
        let mut poly = NcPoly::zero();
        for (letters, re, rc) in terms {
            let coeff = spec.integer(re).add(&spec.integer(rc).mul(&r));
            poly.add_term(Word::from_letters(&letters), coeff);
        }
        let nf = h.normal_form(&poly);
        let printed = print_expression(&h, &nf);
        let reparsed = parse_expression(&h, &printed).unwrap();
        prop_assert_eq!(reparsed, nf, "printed form: {}", printed);
    }
}
