//! The quotient coalgebra A/AB⁺ and its cleaving map.
//!
//! B is the commutative subalgebra on s and t, B⁺ its augmentation ideal. At
//! (p,q) = (0,0) the quotient A/AB⁺ is 18-dimensional with basis the classes
//! of the words aⁱbʲFˡ (i, l ≤ 2, j ≤ 1). The paper-style classes
//! [aⁱbʲ(xa)ˡ] form a second basis; the change of basis is computed once and
//! used to express the section γ and the colinearity check exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{FieldElement, FieldSpec};
use crate::freealg::{NcPoly, Word};
use crate::hopf::catalog::{self, AlgebraName, CatalogError, PqPreset, GA, GB, GF, GS, GT};
use crate::hopf::{HopfError, HopfPresentation, StructReport};
use crate::linalg::ExactMatrix;
use crate::rewrite::RewriteSystem;

pub const NUM_CLASSES: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CleftError {
    /// The quotient description is only valid at (p,q) = (0,0).
    RequiresZeroParameters,
    /// Only the algebras with the F³-type extra relation admit the
    /// 18-dimensional quotient.
    UnsupportedAlgebra,
    UnknownClass { index: usize },
    Catalog(CatalogError),
    Hopf(HopfError),
}

impl From<CatalogError> for CleftError {
    fn from(e: CatalogError) -> CleftError {
        CleftError::Catalog(e)
    }
}

impl From<HopfError> for CleftError {
    fn from(e: HopfError) -> CleftError {
        CleftError::Hopf(e)
    }
}

impl fmt::Display for CleftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CleftError::RequiresZeroParameters => {
                write!(f, "the quotient coalgebra requires parameters (0,0)")
            }
            CleftError::UnsupportedAlgebra => {
                write!(f, "quotient coalgebra only defined for the finite quotient algebras")
            }
            CleftError::UnknownClass { index } => write!(f, "unknown class index {index}"),
            CleftError::Catalog(e) => write!(f, "{e}"),
            CleftError::Hopf(e) => write!(f, "{e}"),
        }
    }
}

/// Index of the class [aⁱ bʲ (xa)ˡ] (and likewise of the basis class
/// [aⁱ bʲ Fˡ]); i, l ∈ {0,1,2}, j ∈ {0,1}.
pub fn class_index(i: usize, j: usize, l: usize) -> usize {
    debug_assert!(i < 3 && j < 2 && l < 3);
    l * 6 + i * 2 + j
}

pub fn class_parts(idx: usize) -> (usize, usize, usize) {
    (idx / 2 % 3, idx % 2, idx / 6)
}

/// The quotient coalgebra A/AB⁺ of an ambient presentation at (0,0).
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    ambient: HopfPresentation,
    /// System used for projection; reduces without consuming F³ into s-words.
    reducer: RewriteSystem,
    /// Image substituted for F³ during projection (zero when the reducer
    /// already rewrites F³).
    f_cube_image: NcPoly,
    /// Columns: π(aⁱbʲ(xa)ˡ) written in the F-class basis.
    xa_matrix: ExactMatrix,
}

impl QuotientCoalgebra {
    /// Build the quotient for algebra `A` or `Agen` over a root-bearing field.
    pub fn for_algebra(name: AlgebraName, spec: &FieldSpec) -> Result<QuotientCoalgebra, CleftError> {
        let ambient = catalog::build(name, spec, PqPreset::Zero)?;
        let (reducer, f_cube_image) = match name {
            // F³ → 0 is already a rule of A
            AlgebraName::A => (ambient.system().clone(), NcPoly::zero()),
            // In Agen the extra relation is oriented at s³, so F³ stays
            // irreducible; project through the 13-rule system and fold the
            // central F³ to −(3r+6)(s²+s³) separately. Folding inside Agen's
            // own system would cycle.
            AlgebraName::Agen => {
                let atilde = catalog::build(AlgebraName::Atilde, spec, PqPreset::Zero)?;
                let r = spec.root().map_err(|_| CleftError::Catalog(CatalogError::RootRequired))?;
                let coef = r.mul(&spec.integer(3)).add(&spec.integer(6)).negated();
                let mut img = NcPoly::term(Word::from_letters(&[GS, GS]), coef.clone());
                img.add_term(Word::from_letters(&[GS, GS, GS]), coef);
                (atilde.system().clone(), img)
            }
            _ => return Err(CleftError::UnsupportedAlgebra),
        };
        QuotientCoalgebra::new(ambient, reducer, f_cube_image)
    }

    pub fn new(
        ambient: HopfPresentation,
        reducer: RewriteSystem,
        f_cube_image: NcPoly,
    ) -> Result<QuotientCoalgebra, CleftError> {
        if !ambient.p().is_zero() || !ambient.q().is_zero() {
            return Err(CleftError::RequiresZeroParameters);
        }
        let mut q = QuotientCoalgebra {
            ambient,
            reducer,
            f_cube_image,
            xa_matrix: ExactMatrix::zero(0, 0, &FieldSpec::Rational),
        };
        let spec = q.ambient.spec().clone();
        let mut m = ExactMatrix::zero(NUM_CLASSES, NUM_CLASSES, &spec);
        for idx in 0..NUM_CLASSES {
            let v = q.project(&NcPoly::word(xa_class_word(idx), &spec));
            for (row, e) in v.into_iter().enumerate() {
                m.set(row, idx, e);
            }
        }
        q.xa_matrix = m;
        Ok(q)
    }

    pub fn ambient(&self) -> &HopfPresentation {
        &self.ambient
    }

    fn spec(&self) -> &FieldSpec {
        self.ambient.spec()
    }

    /// Reduce and fold F³ until every term has F-degree ≤ 2.
    fn fold(&self, f: &NcPoly) -> NcPoly {
        let fff = Word::from_letters(&[GF, GF, GF]);
        let mut cur = self.reducer.normal_form(f);
        loop {
            let mut next = NcPoly::zero();
            let mut changed = false;
            for (w, c) in cur.terms() {
                match w.find(&fff) {
                    None => next.add_term(w.clone(), c.clone()),
                    Some(pos) => {
                        changed = true;
                        let head = NcPoly::term(w.subrange(0, pos), c.clone());
                        let tail = NcPoly::word(w.subrange(pos + 3, w.len()), self.spec());
                        next.add_assign(&head.multiply(&self.f_cube_image).multiply(&tail));
                    }
                }
            }
            cur = self.reducer.normal_form(&next);
            if !changed {
                return cur;
            }
        }
    }

    /// π(f): the class vector of f in the F-class basis [aⁱbʲFˡ]. Terms with
    /// a B⁺ factor (any s or t letter after reduction) vanish.
    pub fn project(&self, f: &NcPoly) -> Vec<FieldElement> {
        let mut out = alloc::vec![self.spec().zero(); NUM_CLASSES];
        for (w, c) in self.fold(f).terms() {
            if w.letters().any(|g| g == GS || g == GT) {
                continue;
            }
            let i = w.count_letter(GA);
            let j = w.count_letter(GB);
            let l = w.count_letter(GF);
            let idx = class_index(i, j, l);
            out[idx] = out[idx].add(c);
        }
        out
    }

    /// γ on the paper classes: aⁱbʲ, aⁱbʲ·(xa), aⁱbʲ((xa)² − a(xa)x).
    pub fn gamma(&self, idx: usize) -> Result<NcPoly, CleftError> {
        if idx >= NUM_CLASSES {
            return Err(CleftError::UnknownClass { index: idx });
        }
        let (i, j, l) = class_parts(idx);
        let spec = self.spec();
        let head = NcPoly::word(ab_word(i, j), spec);
        let sa = Word::from_letters(&[GS, GA]);
        let tail = match l {
            0 => NcPoly::one(spec),
            1 => NcPoly::word(sa.clone(), spec),
            2 => {
                // (xa)² − a(xa)x at q = 0, i.e. sasa − asas
                let mut t = NcPoly::word(sa.concat(&sa), spec);
                t.add_term(Word::from_letters(&[GA, GS, GA, GS]), spec.one().negated());
                t
            }
            _ => unreachable!(),
        };
        Ok(head.multiply(&tail))
    }

    /// γ extended linearly to an F-class vector, via the change of basis.
    fn gamma_of_vector(&self, v: &[FieldElement]) -> Result<NcPoly, CleftError> {
        let coords = self
            .xa_matrix
            .solve(v)
            .expect("xa classes form a basis");
        let mut out = NcPoly::zero();
        for (idx, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&self.gamma(idx)?.scaled(c));
            }
        }
        Ok(out)
    }

    /// Δ on the quotient: (π⊗π)Δ applied to a class representative, as a
    /// sparse matrix over class pairs.
    pub fn delta_quot(&self, idx: usize) -> Result<Vec<(usize, usize, FieldElement)>, CleftError> {
        let rep = NcPoly::word(xa_class_word(idx), self.spec());
        let d = self.ambient.coproduct(&rep)?;
        let mut acc: Vec<(usize, usize, FieldElement)> = Vec::new();
        for (key, c) in d.terms() {
            let left = self.project(&NcPoly::word(key[0].clone(), self.spec()));
            let right = self.project(&NcPoly::word(key[1].clone(), self.spec()));
            for (li, lc) in left.iter().enumerate() {
                if lc.is_zero() {
                    continue;
                }
                for (ri, rc) in right.iter().enumerate() {
                    if rc.is_zero() {
                        continue;
                    }
                    let coeff = c.mul(lc).mul(rc);
                    match acc.iter_mut().find(|(a, b, _)| *a == li && *b == ri) {
                        Some((_, _, e)) => *e = e.add(&coeff),
                        None => acc.push((li, ri, coeff)),
                    }
                }
            }
        }
        acc.retain(|(_, _, c)| !c.is_zero());
        Ok(acc)
    }

    /// π ∘ γ = id on all 18 classes.
    pub fn check_section(&self) -> Result<StructReport, CleftError> {
        let mut report = StructReport::default();
        for idx in 0..NUM_CLASSES {
            let v = self.project(&self.gamma(idx)?);
            let expect: Vec<FieldElement> =
                (0..NUM_CLASSES).map(|r| self.xa_matrix.get(r, idx).clone()).collect();
            report.checks += 1;
            if v != expect {
                report.failures.push(format!("section fails on {}", class_label(idx)));
            }
        }
        Ok(report)
    }

    /// (π⊗id)Δ(γ(h)) = (id⊗γ)Δ_quot(h) for every class h.
    pub fn check_colinearity(&self) -> Result<StructReport, CleftError> {
        let mut report = StructReport::default();
        for idx in 0..NUM_CLASSES {
            // left side: project the first leg of Δ(γ(h))
            let d = self.ambient.coproduct(&self.gamma(idx)?)?;
            let mut lhs: Vec<NcPoly> = alloc::vec![NcPoly::zero(); NUM_CLASSES];
            for (key, c) in d.terms() {
                let left = self.project(&NcPoly::word(key[0].clone(), self.spec()));
                for (ci, lc) in left.iter().enumerate() {
                    if !lc.is_zero() {
                        lhs[ci].add_term(key[1].clone(), c.mul(lc));
                    }
                }
            }
            // right side: Δ_quot(h), then γ on the second leg
            let mut rhs: Vec<NcPoly> = alloc::vec![NcPoly::zero(); NUM_CLASSES];
            for (li, ri, c) in self.delta_quot(idx)? {
                let mut unit = alloc::vec![self.spec().zero(); NUM_CLASSES];
                unit[ri] = self.spec().one();
                let g = self.gamma_of_vector(&unit)?;
                rhs[li].add_assign(&self.ambient.normal_form(&g).scaled(&c));
            }
            let ok = lhs
                .iter()
                .zip(rhs.iter())
                .all(|(l, r)| self.ambient.normal_form(&l.sub(r)).is_zero());
            report.checks += 1;
            if !ok {
                report
                    .failures
                    .push(format!("colinearity fails on {}", class_label(idx)));
            }
        }
        Ok(report)
    }

    /// On the coradical (the six group-like classes), [aⁱbʲ] ↦ a⁻ⁱb⁻ʲ is a
    /// convolution inverse of γ.
    pub fn check_coradical_inverse(&self) -> Result<StructReport, CleftError> {
        let mut report = StructReport::default();
        let spec = self.spec();
        for i in 0..3 {
            for j in 0..2 {
                let idx = class_index(i, j, 0);
                let g = self.gamma(idx)?;
                let inv = NcPoly::word(ab_word((3 - i) % 3, (2 - j) % 2), spec);
                let prod = self.ambient.normal_form(&g.multiply(&inv));
                report.checks += 1;
                if prod != NcPoly::one(spec) {
                    report.failures.push(format!(
                        "coradical inverse fails on {}",
                        class_label(idx)
                    ));
                }
            }
        }
        Ok(report)
    }
}

fn ab_word(i: usize, j: usize) -> Word {
    let mut letters = Vec::new();
    letters.extend(core::iter::repeat(GA).take(i));
    letters.extend(core::iter::repeat(GB).take(j));
    Word::from_letters(&letters)
}

/// The representative word aⁱ bʲ (sa)ˡ of the paper class (s = x at q = 0).
fn xa_class_word(idx: usize) -> Word {
    let (i, j, l) = class_parts(idx);
    let mut letters = Vec::new();
    letters.extend(core::iter::repeat(GA).take(i));
    letters.extend(core::iter::repeat(GB).take(j));
    for _ in 0..l {
        letters.push(GS);
        letters.push(GA);
    }
    Word::from_letters(&letters)
}

pub fn class_label(idx: usize) -> String {
    let (i, j, l) = class_parts(idx);
    let mut s = String::new();
    for part in [("a", i), ("b", j), ("xa", l)] {
        for _ in 0..part.1 {
            if part.0 == "xa" {
                s.push_str("(xa)");
            } else {
                s.push_str(part.0);
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    format!("[{s}]")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient_a() -> QuotientCoalgebra {
        QuotientCoalgebra::for_algebra(AlgebraName::A, &FieldSpec::Cyclotomic3).unwrap()
    }

    #[test]
    fn f_basis_words_are_class_representatives() {
        let q = quotient_a();
        let spec = FieldSpec::Cyclotomic3;
        for i in 0..3 {
            for j in 0..2 {
                for l in 0..3 {
                    let mut letters = Vec::new();
                    letters.extend(core::iter::repeat(GA).take(i));
                    letters.extend(core::iter::repeat(GB).take(j));
                    letters.extend(core::iter::repeat(GF).take(l));
                    let w = Word::from_letters(&letters);
                    let v = q.project(&NcPoly::word(w, &spec));
                    for (idx, e) in v.iter().enumerate() {
                        if idx == class_index(i, j, l) {
                            assert_eq!(e, &spec.one());
                        } else {
                            assert!(e.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_kills_b_plus() {
        let q = quotient_a();
        let spec = FieldSpec::Cyclotomic3;
        // x = s and y = t at (0,0)
        for g in [GS, GT] {
            let v = q.project(&NcPoly::word(Word::generator(g), &spec));
            assert!(v.iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn projection_of_xa() {
        // π(xa) = [F] + (r+2)/3·([a²] − [a])
        let q = quotient_a();
        let spec = FieldSpec::Cyclotomic3;
        let coef = spec.root().unwrap().add(&spec.integer(2)).mul(&spec.ratio(1, 3));
        let v = q.project(&NcPoly::word(Word::from_letters(&[GS, GA]), &spec));
        for (idx, e) in v.iter().enumerate() {
            if idx == class_index(0, 0, 1) {
                assert_eq!(e, &spec.one());
            } else if idx == class_index(2, 0, 0) {
                assert_eq!(e, &coef);
            } else if idx == class_index(1, 0, 0) {
                assert_eq!(e, &coef.negated());
            } else {
                assert!(e.is_zero(), "unexpected entry at {}", class_label(idx));
            }
        }
    }

    #[test]
    fn section_and_coradical() {
        let q = quotient_a();
        assert!(q.check_section().unwrap().pass());
        assert!(q.check_coradical_inverse().unwrap().pass());
    }

    #[test]
    fn colinearity_holds_in_a() {
        let q = quotient_a();
        let report = q.check_colinearity().unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures);
    }

    #[test]
    fn quotient_requires_zero_parameters() {
        let spec = FieldSpec::Cyclotomic3;
        let ambient = catalog::build(AlgebraName::A, &spec, PqPreset::SixThree).unwrap();
        let reducer = ambient.system().clone();
        let err = QuotientCoalgebra::new(ambient, reducer, NcPoly::zero());
        assert!(matches!(err, Err(CleftError::RequiresZeroParameters)));
    }
}
