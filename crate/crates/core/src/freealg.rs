//! The free associative algebra over a fixed generator alphabet.
//!
//! Generators are identified by index; names live with the presentation.
//! [`Word`] is a monomial, [`NcPoly`] a finite linear combination of words,
//! [`TensorPoly`] an element of a tensor power (arity ≤ 3 in practice).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coeff::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeAlgError {
    MissingImage { generator: usize },
    ArityMismatch { left: usize, right: usize },
}

impl fmt::Display for FreeAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeAlgError::MissingImage { generator } => {
                write!(f, "no image given for generator #{generator}")
            }
            FreeAlgError::ArityMismatch { left, right } => {
                write!(f, "tensor arity mismatch: {left} vs {right}")
            }
        }
    }
}

/// A monomial: a sequence of generator indices. The empty word is 1.
///
/// The derived map order used for canonical storage is length-then-lex on raw
/// indices; rewriting decisions go through
/// [`MonomialOrder`](crate::rewrite::MonomialOrder) instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn generator(idx: usize) -> Word {
        Word(alloc::vec![idx as u8])
    }

    pub fn from_letters(letters: &[usize]) -> Word {
        Word(letters.iter().map(|&g| g as u8).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&b| b as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn subrange(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// First position at which `pattern` occurs as a subword, if any.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.0.is_empty() || pattern.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - pattern.0.len()).find(|&i| self.0[i..i + pattern.0.len()] == pattern.0)
    }

    pub fn count_letter(&self, gen: usize) -> usize {
        self.0.iter().filter(|&&b| b as usize == gen).count()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, FieldElement>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one(spec: &FieldSpec) -> NcPoly {
        NcPoly::term(Word::empty(), spec.one())
    }

    pub fn term(word: Word, coeff: FieldElement) -> NcPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    pub fn word(word: Word, spec: &FieldSpec) -> NcPoly {
        NcPoly::term(word, spec.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&FieldElement> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: Word, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            None => {
                self.terms.insert(word, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(word, sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in rhs.terms.iter() {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), c.negated());
        }
        out
    }

    pub fn negated(&self) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &FieldElement) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Bilinear extension of word concatenation. No reduction is applied.
    pub fn multiply(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, c) in self.terms.iter() {
            for (v, d) in rhs.terms.iter() {
                out.add_term(u.concat(v), c.mul(d));
            }
        }
        out
    }

    pub fn pow(&self, n: usize, spec: &FieldSpec) -> NcPoly {
        let mut out = NcPoly::one(spec);
        for _ in 0..n {
            out = out.multiply(self);
        }
        out
    }

    /// The scalar c such that self = c·1, if the polynomial is constant.
    pub fn as_constant(&self, spec: &FieldSpec) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(spec.zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// View as an arity-1 tensor.
    pub fn to_tensor(&self) -> TensorPoly {
        TensorPoly {
            arity: 1,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (alloc::vec![w.clone()], c.clone()))
                .collect(),
        }
    }
}

/// An element of the k-th tensor power of the free algebra, k ≤ 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    arity: usize,
    terms: BTreeMap<Vec<Word>, FieldElement>,
}

impl TensorPoly {
    pub fn zero(arity: usize) -> TensorPoly {
        TensorPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, spec: &FieldSpec) -> TensorPoly {
        TensorPoly::term(alloc::vec![Word::empty(); arity], spec.one())
    }

    pub fn term(slots: Vec<Word>, coeff: FieldElement) -> TensorPoly {
        let arity = slots.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(slots, coeff);
        }
        TensorPoly { arity, terms }
    }

    /// The elementary tensor f₁ ⊗ … ⊗ f_k of polynomials, expanded.
    pub fn pure(slots: &[NcPoly], spec: &FieldSpec) -> TensorPoly {
        let mut out = TensorPoly::one(slots.len(), spec);
        for (i, f) in slots.iter().enumerate() {
            let mut next = TensorPoly::zero(slots.len());
            for (key, c) in out.terms.iter() {
                for (w, d) in f.terms() {
                    let mut nk = key.clone();
                    nk[i] = nk[i].concat(w);
                    next.add_term(nk, c.mul(d));
                }
            }
            out = next;
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, slots: &[Word]) -> Option<&FieldElement> {
        self.terms.get(slots)
    }

    pub fn add_term(&mut self, slots: Vec<Word>, coeff: FieldElement) {
        debug_assert_eq!(slots.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&slots) {
            None => {
                self.terms.insert(slots, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(slots, sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &TensorPoly) {
        for (k, c) in rhs.terms.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(k.clone(), c.negated());
        }
        out
    }

    pub fn scaled(&self, c: &FieldElement) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(self.arity);
        }
        TensorPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Slotwise product: (u₁⊗…⊗u_k)(w₁⊗…⊗w_k) = u₁w₁ ⊗ … ⊗ u_k w_k.
    pub fn multiply(&self, rhs: &TensorPoly) -> Result<TensorPoly, FreeAlgError> {
        if self.arity != rhs.arity {
            return Err(FreeAlgError::ArityMismatch { left: self.arity, right: rhs.arity });
        }
        let mut out = TensorPoly::zero(self.arity);
        for (k1, c1) in self.terms.iter() {
            for (k2, c2) in rhs.terms.iter() {
                let slots = k1
                    .iter()
                    .zip(k2.iter())
                    .map(|(u, v)| u.concat(v))
                    .collect();
                out.add_term(slots, c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Map every slot through `f`, dropping terms that map to zero.
    pub fn map_slots(&self, mut f: impl FnMut(usize, &Word) -> NcPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.arity);
        for (key, c) in self.terms.iter() {
            // expand the product of per-slot images
            let mut partial: Vec<(Vec<Word>, FieldElement)> =
                alloc::vec![(Vec::new(), c.clone())];
            for (i, w) in key.iter().enumerate() {
                let image = f(i, w);
                let mut next = Vec::new();
                for (slots, coeff) in partial.iter() {
                    for (iw, ic) in image.terms() {
                        let mut ns = slots.clone();
                        ns.push(iw.clone());
                        next.push((ns, coeff.mul(ic)));
                    }
                }
                partial = next;
            }
            for (slots, coeff) in partial {
                out.add_term(slots, coeff);
            }
        }
        out
    }
}

/// Anything a free-algebra morphism can land in.
pub trait AlgebraElement: Clone {
    fn mul(&self, rhs: &Self) -> Self;
    fn add_scaled(&mut self, rhs: &Self, c: &FieldElement);
    fn zero_like(&self) -> Self;
}

impl AlgebraElement for NcPoly {
    fn mul(&self, rhs: &Self) -> Self {
        self.multiply(rhs)
    }
    fn add_scaled(&mut self, rhs: &Self, c: &FieldElement) {
        for (w, k) in rhs.terms.iter() {
            self.add_term(w.clone(), k.mul(c));
        }
    }
    fn zero_like(&self) -> Self {
        NcPoly::zero()
    }
}

impl AlgebraElement for TensorPoly {
    fn mul(&self, rhs: &Self) -> Self {
        self.multiply(rhs).expect("tensor arity mismatch")
    }
    fn add_scaled(&mut self, rhs: &Self, c: &FieldElement) {
        for (k, v) in rhs.terms.iter() {
            self.add_term(k.clone(), v.mul(c));
        }
    }
    fn zero_like(&self) -> Self {
        TensorPoly::zero(self.arity)
    }
}

impl AlgebraElement for FieldElement {
    fn mul(&self, rhs: &Self) -> Self {
        FieldElement::mul(self, rhs)
    }
    fn add_scaled(&mut self, rhs: &Self, c: &FieldElement) {
        *self = self.add(&rhs.mul(c));
    }
    fn zero_like(&self) -> Self {
        self.sub(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismDirection {
    Homomorphism,
    AntiHomomorphism,
}

/// Extend generator images to a (anti-)homomorphism of the free algebra and
/// apply it to `f`. The empty word maps to `unit`.
pub fn extend_morphism<T: AlgebraElement>(
    f: &NcPoly,
    images: &[T],
    unit: &T,
    direction: MorphismDirection,
) -> Result<T, FreeAlgError> {
    let mut acc = unit.zero_like();
    for (word, c) in f.terms() {
        let mut prod = unit.clone();
        let apply = |prod: &mut T, g: usize| -> Result<(), FreeAlgError> {
            let img = images.get(g).ok_or(FreeAlgError::MissingImage { generator: g })?;
            *prod = prod.mul(img);
            Ok(())
        };
        match direction {
            MorphismDirection::Homomorphism => {
                for g in word.letters() {
                    apply(&mut prod, g)?;
                }
            }
            MorphismDirection::AntiHomomorphism => {
                for g in word.letters().collect::<Vec<_>>().into_iter().rev() {
                    apply(&mut prod, g)?;
                }
            }
        }
        acc.add_scaled(&prod, c);
    }
    Ok(acc)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.letters().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "g{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> FieldSpec {
        FieldSpec::Rational
    }

    fn gen(i: usize) -> NcPoly {
        NcPoly::word(Word::generator(i), &spec())
    }

    #[test]
    fn multiply_concatenates() {
        // x = 0, a = 1
        let xa = gen(0).multiply(&gen(1));
        assert_eq!(xa, NcPoly::word(Word::from_letters(&[0, 1]), &spec()));
    }

    #[test]
    fn one_plus_a_times_one_minus_a() {
        let one = NcPoly::one(&spec());
        let a = gen(0);
        let prod = one.add(&a).multiply(&one.sub(&a));
        let expect = one.sub(&a.multiply(&a));
        assert_eq!(prod, expect);
    }

    #[test]
    fn identity_is_neutral() {
        let f = gen(0).multiply(&gen(1)).add(&gen(1).multiply(&gen(0)));
        assert_eq!(f.multiply(&NcPoly::one(&spec())), f);
    }

    #[test]
    fn tensor_slotwise_product() {
        let s = spec();
        // (1⊗x)·(x⊗a) = x ⊗ xa  with x = 0, a = 1
        let x = Word::generator(0);
        let a = Word::generator(1);
        let lhs = TensorPoly::term(alloc::vec![Word::empty(), x.clone()], s.one());
        let rhs = TensorPoly::term(alloc::vec![x.clone(), a.clone()], s.one());
        let prod = lhs.multiply(&rhs).unwrap();
        assert_eq!(
            prod,
            TensorPoly::term(alloc::vec![x.clone(), x.concat(&a)], s.one())
        );
    }

    #[test]
    fn tensor_arity_mismatch_rejected() {
        let s = spec();
        let t1 = TensorPoly::one(1, &s);
        let t2 = TensorPoly::one(2, &s);
        assert!(t1.multiply(&t2).is_err());
    }

    #[test]
    fn delta_x_squared_expansion() {
        // (1⊗x + x⊗a)² = 1⊗x² + x⊗xa + x⊗ax + x²⊗a², the four-term FOIL.
        let s = spec();
        let x = Word::generator(0);
        let a = Word::generator(1);
        let dx = TensorPoly::term(alloc::vec![Word::empty(), x.clone()], s.one()).add(
            &TensorPoly::term(alloc::vec![x.clone(), a.clone()], s.one()),
        );
        let sq = dx.multiply(&dx).unwrap();
        let mut expect = TensorPoly::zero(2);
        expect.add_term(alloc::vec![Word::empty(), x.pow(2)], s.one());
        expect.add_term(alloc::vec![x.clone(), x.concat(&a)], s.one());
        expect.add_term(alloc::vec![x.clone(), a.concat(&x)], s.one());
        expect.add_term(alloc::vec![x.pow(2), a.pow(2)], s.one());
        assert_eq!(sq, expect);
    }

    #[test]
    fn grouplike_morphism_extension() {
        // Δ(ab) = ab⊗ab when Δ(a)=a⊗a, Δ(b)=b⊗b
        let s = spec();
        let a = Word::generator(0);
        let b = Word::generator(1);
        let images = alloc::vec![
            TensorPoly::term(alloc::vec![a.clone(), a.clone()], s.one()),
            TensorPoly::term(alloc::vec![b.clone(), b.clone()], s.one()),
        ];
        let ab = NcPoly::word(a.concat(&b), &s);
        let out = extend_morphism(
            &ab,
            &images,
            &TensorPoly::one(2, &s),
            MorphismDirection::Homomorphism,
        )
        .unwrap();
        assert_eq!(
            out,
            TensorPoly::term(alloc::vec![a.concat(&b), a.concat(&b)], s.one())
        );
    }

    #[test]
    fn anti_morphism_reverses() {
        // S(xa) = S(a)S(x) = a²·(−xa²) = −a²xa² with x = 0, a = 1
        let s = spec();
        let x = Word::generator(0);
        let a = Word::generator(1);
        let s_x = NcPoly::term(x.concat(&a.pow(2)), s.integer(-1));
        let s_a = NcPoly::word(a.pow(2), &s);
        let images = alloc::vec![s_x, s_a];
        let out = extend_morphism(
            &NcPoly::word(x.concat(&a), &s),
            &images,
            &NcPoly::one(&s),
            MorphismDirection::AntiHomomorphism,
        )
        .unwrap();
        let expect = NcPoly::term(
            a.pow(2).concat(&x).concat(&a.pow(2)),
            s.integer(-1),
        );
        assert_eq!(out, expect);
    }

    #[test]
    fn missing_image_reported() {
        let s = spec();
        let f = NcPoly::word(Word::generator(3), &s);
        let images: Vec<NcPoly> = alloc::vec![NcPoly::one(&s)];
        let err = extend_morphism(&f, &images, &NcPoly::one(&s), MorphismDirection::Homomorphism);
        assert_eq!(err, Err(FreeAlgError::MissingImage { generator: 3 }));
    }
}
