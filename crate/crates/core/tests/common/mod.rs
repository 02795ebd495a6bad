#![allow(dead_code)]

use hopfcalc_core::coeff::{FieldElement, FieldSpec};
use hopfcalc_core::freealg::{NcPoly, Word};
use hopfcalc_core::hopf::catalog::{self, AlgebraName, PqPreset};
use hopfcalc_core::hopf::HopfPresentation;

pub fn fields() -> Vec<FieldSpec> {
    vec![FieldSpec::Cyclotomic3, FieldSpec::f7(), FieldSpec::f13()]
}

pub fn build(name: AlgebraName, spec: &FieldSpec, preset: PqPreset) -> HopfPresentation {
    catalog::build(name, spec, preset).expect("catalog build")
}

pub fn word(letters: &[usize]) -> Word {
    Word::from_letters(letters)
}

pub fn term(c: FieldElement, letters: &[usize]) -> NcPoly {
    NcPoly::term(word(letters), c)
}

pub fn mono(spec: &FieldSpec, letters: &[usize]) -> NcPoly {
    term(spec.one(), letters)
}

pub fn alias(h: &HopfPresentation, name: &str) -> NcPoly {
    h.alias(name).unwrap_or_else(|| panic!("alias {name}")).clone()
}

/// Counts of basis words by truncation weight, up to and including `max`.
pub fn weight_census(h: &HopfPresentation, max: u64) -> Vec<usize> {
    let words = h.basis_words(max).words;
    let mut counts = vec![0usize; max as usize + 1];
    for w in &words {
        counts[h.word_weight(w) as usize] += 1;
    }
    counts
}
