//! Hopf-algebra presentations on top of a rewriting system.
//!
//! A [`HopfPresentation`] couples a confluent [`RewriteSystem`] with a
//! coalgebra tag per generator: group-like, or skew-primitive with respect to
//! two group-like words (plus optional correction terms for translated
//! generators). The counit and antipode are derived from the axioms rather
//! than configured, so a presentation either carries a consistent Hopf
//! structure or the structural checks report exactly where it breaks.

pub mod catalog;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{CoeffError, FieldElement, FieldSpec};
use crate::freealg::{
    extend_morphism, FreeAlgError, MorphismDirection, NcPoly, TensorPoly, Word,
};
use crate::linalg::SparseEchelon;
use crate::rewrite::{BasisEnumeration, RewriteSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    /// The presentation carries no coalgebra tags (plain algebra).
    NoCoalgebraStructure,
    /// A tagged group-like word never powers back to 1.
    GroupLikeNotInvertible { word: Word },
    /// p² = q² + q³ fails, so the translated skew-primitives are inconsistent.
    ParameterConstraintViolated,
    Coeff(CoeffError),
    Morphism(FreeAlgError),
}

impl From<CoeffError> for HopfError {
    fn from(e: CoeffError) -> HopfError {
        HopfError::Coeff(e)
    }
}

impl From<FreeAlgError> for HopfError {
    fn from(e: FreeAlgError) -> HopfError {
        HopfError::Morphism(e)
    }
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::NoCoalgebraStructure => {
                write!(f, "presentation has no coalgebra structure")
            }
            HopfError::GroupLikeNotInvertible { word } => {
                write!(f, "group-like word {word} has no inverse under the relations")
            }
            HopfError::ParameterConstraintViolated => {
                write!(f, "parameters violate p^2 = q^2 + q^3")
            }
            HopfError::Coeff(e) => write!(f, "{e}"),
            HopfError::Morphism(e) => write!(f, "{e}"),
        }
    }
}

/// How a generator sits in the coalgebra.
///
/// `SkewPrimitive` encodes Δ(v) = g_left ⊗ v + v ⊗ g_right + Σ cᵢ·(uᵢ ⊗ wᵢ),
/// where the correction words uᵢ, wᵢ are group-like. The corrections appear
/// for generators that are a skew-primitive shifted by a multiple of a
/// group-like element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoalgebraTag {
    GroupLike,
    SkewPrimitive {
        g_left: Word,
        g_right: Word,
        extra: Vec<(FieldElement, Word, Word)>,
    },
}

/// Outcome of a structural check: every performed sub-check either passed or
/// contributed a human-readable failure.
#[derive(Clone, Debug, Default)]
pub struct StructReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl StructReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

/// Result of a minimal-polynomial search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinPolyResult {
    /// Monic coefficients c₀ … c_d with c_d = 1 and Σ cᵢ·fⁱ = 0.
    Poly(Vec<FieldElement>),
    /// 1, f, …, f^max_degree are linearly independent.
    IndependentUpTo(usize),
}

#[derive(Clone, Debug)]
pub struct CoidealReport {
    pub subalgebra_dim: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CoidealReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct HopfSubReport {
    /// Total dimension when the subalgebra basis is finite, else `None`.
    pub dimension: Option<usize>,
    pub enumerated: usize,
    pub mult_failures: Vec<String>,
    pub delta_failures: Vec<String>,
    pub antipode_failures: Vec<String>,
}

impl HopfSubReport {
    pub fn closed(&self) -> bool {
        self.mult_failures.is_empty()
            && self.delta_failures.is_empty()
            && self.antipode_failures.is_empty()
    }
}

/// A finitely presented algebra with optional Hopf structure.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    spec: FieldSpec,
    gen_names: Vec<String>,
    system: RewriteSystem,
    trunc_weights: Vec<u64>,
    tags: Option<Vec<CoalgebraTag>>,
    aliases: BTreeMap<String, NcPoly>,
    p: FieldElement,
    q: FieldElement,
    delta_images: Option<Vec<TensorPoly>>,
    counit_images: Option<Vec<FieldElement>>,
    antipode_images: Option<Vec<NcPoly>>,
}

impl HopfPresentation {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        spec: FieldSpec,
        gen_names: Vec<String>,
        system: RewriteSystem,
        trunc_weights: Vec<u64>,
        tags: Option<Vec<CoalgebraTag>>,
        aliases: BTreeMap<String, NcPoly>,
        p: FieldElement,
        q: FieldElement,
    ) -> Result<HopfPresentation, HopfError> {
        let p2 = p.checked_mul(&p)?;
        let q2 = q.checked_mul(&q)?;
        let q3 = q2.checked_mul(&q)?;
        if p2 != q2.checked_add(&q3)? {
            return Err(HopfError::ParameterConstraintViolated);
        }
        let mut h = HopfPresentation {
            spec,
            gen_names,
            system,
            trunc_weights,
            tags,
            aliases,
            p,
            q,
            delta_images: None,
            counit_images: None,
            antipode_images: None,
        };
        h.derive_structure()?;
        Ok(h)
    }

    fn derive_structure(&mut self) -> Result<(), HopfError> {
        let Some(tags) = self.tags.clone() else {
            return Ok(());
        };
        let mut deltas = Vec::with_capacity(tags.len());
        let mut counits = Vec::with_capacity(tags.len());
        let mut antipodes = Vec::with_capacity(tags.len());
        for (idx, tag) in tags.iter().enumerate() {
            let v = Word::generator(idx);
            match tag {
                CoalgebraTag::GroupLike => {
                    deltas.push(TensorPoly::term(
                        alloc::vec![v.clone(), v.clone()],
                        self.spec.one(),
                    ));
                    counits.push(self.spec.one());
                    antipodes.push(self.grouplike_inverse(&v)?);
                }
                CoalgebraTag::SkewPrimitive { g_left, g_right, extra } => {
                    let mut d = TensorPoly::term(
                        alloc::vec![g_left.clone(), v.clone()],
                        self.spec.one(),
                    );
                    d.add_term(alloc::vec![v.clone(), g_right.clone()], self.spec.one());
                    for (c, u, w) in extra {
                        d.add_term(alloc::vec![u.clone(), w.clone()], c.clone());
                    }
                    deltas.push(d);

                    // counit law: ε(g_left)·v + ε(v)·g_right + Σ cᵢ·wᵢ = v
                    // with group-like ε = 1 forces ε(v) = −Σ cᵢ.
                    let mut eps = self.spec.zero();
                    for (c, _, _) in extra {
                        eps = eps.checked_add(&c.negated())?;
                    }
                    counits.push(eps.clone());

                    // antipode axiom m(S⊗id)Δ(v) = ε(v)·1 solved for S(v):
                    // S(v) = (ε(v)·1 − g_left⁻¹·v − Σ cᵢ·uᵢ⁻¹·wᵢ) · g_right⁻¹
                    let gl_inv = self.grouplike_inverse(g_left)?;
                    let gr_inv = self.grouplike_inverse(g_right)?;
                    let mut num = NcPoly::term(Word::empty(), eps);
                    num.add_assign(
                        &gl_inv
                            .multiply(&NcPoly::word(v.clone(), &self.spec))
                            .negated(),
                    );
                    for (c, u, w) in extra {
                        let u_inv = self.grouplike_inverse(u)?;
                        let piece = u_inv
                            .multiply(&NcPoly::word(w.clone(), &self.spec))
                            .scaled(&c.negated());
                        num.add_assign(&piece);
                    }
                    antipodes.push(self.system.normal_form(&num.multiply(&gr_inv)));
                }
            }
        }
        self.delta_images = Some(deltas);
        self.counit_images = Some(counits);
        self.antipode_images = Some(antipodes);
        Ok(())
    }

    /// The inverse of a group-like word: the first power whose normal form is
    /// 1 yields the inverse as the preceding power.
    pub fn grouplike_inverse(&self, word: &Word) -> Result<NcPoly, HopfError> {
        let g = self.system.normal_form(&NcPoly::word(word.clone(), &self.spec));
        let one = NcPoly::one(&self.spec);
        let mut prev = one.clone();
        let mut cur = g.clone();
        for _ in 0..512 {
            if cur == one {
                return Ok(prev);
            }
            prev = cur.clone();
            cur = self.system.normal_form(&cur.multiply(&g));
        }
        Err(HopfError::GroupLikeNotInvertible { word: word.clone() })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn num_generators(&self) -> usize {
        self.gen_names.len()
    }

    pub fn trunc_weights(&self) -> &[u64] {
        &self.trunc_weights
    }

    pub fn p(&self) -> &FieldElement {
        &self.p
    }

    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gen_names.iter().position(|n| n == name)
    }

    pub fn generator_poly(&self, idx: usize) -> NcPoly {
        NcPoly::word(Word::generator(idx), &self.spec)
    }

    pub fn alias(&self, name: &str) -> Option<&NcPoly> {
        self.aliases.get(name)
    }

    pub fn alias_names(&self) -> impl Iterator<Item = &String> {
        self.aliases.keys()
    }

    /// Register a named element; stored in normal form.
    pub fn insert_alias(&mut self, name: &str, poly: &NcPoly) {
        let nf = self.system.normal_form(poly);
        self.aliases.insert(String::from(name), nf);
    }

    pub fn has_coalgebra(&self) -> bool {
        self.tags.is_some()
    }

    pub fn tags(&self) -> Option<&[CoalgebraTag]> {
        self.tags.as_deref()
    }

    pub fn normal_form(&self, f: &NcPoly) -> NcPoly {
        self.system.normal_form(f)
    }

    pub fn basis_words(&self, max_weight: u64) -> BasisEnumeration {
        self.system.enumerate_basis(&self.trunc_weights, max_weight)
    }

    pub fn word_weight(&self, w: &Word) -> u64 {
        w.letters().map(|g| self.trunc_weights[g]).sum()
    }

    fn delta_images(&self) -> Result<&[TensorPoly], HopfError> {
        self.delta_images
            .as_deref()
            .ok_or(HopfError::NoCoalgebraStructure)
    }

    fn counit_images(&self) -> Result<&[FieldElement], HopfError> {
        self.counit_images
            .as_deref()
            .ok_or(HopfError::NoCoalgebraStructure)
    }

    pub fn antipode_images(&self) -> Result<&[NcPoly], HopfError> {
        self.antipode_images
            .as_deref()
            .ok_or(HopfError::NoCoalgebraStructure)
    }

    /// Replace one derived antipode image. Only negative controls in the test
    /// suites use this; a consistent presentation never needs it.
    pub fn override_antipode_image(&mut self, generator: usize, image: NcPoly) {
        if let Some(images) = self.antipode_images.as_mut() {
            images[generator] = image;
        }
    }

    /// Reduce every slot to normal form and re-expand the products.
    pub fn tensor_normal_form(&self, t: &TensorPoly) -> TensorPoly {
        t.map_slots(|_, w| self.system.normal_form(&NcPoly::word(w.clone(), &self.spec)))
    }

    /// Δ(f), slotwise reduced.
    pub fn coproduct(&self, f: &NcPoly) -> Result<TensorPoly, HopfError> {
        let images = self.delta_images()?;
        let raw = extend_morphism(
            f,
            images,
            &TensorPoly::one(2, &self.spec),
            MorphismDirection::Homomorphism,
        )?;
        Ok(self.tensor_normal_form(&raw))
    }

    /// ε(f).
    pub fn counit(&self, f: &NcPoly) -> Result<FieldElement, HopfError> {
        let images = self.counit_images()?;
        Ok(extend_morphism(
            f,
            images,
            &self.spec.one(),
            MorphismDirection::Homomorphism,
        )?)
    }

    /// S(f), reduced.
    pub fn antipode(&self, f: &NcPoly) -> Result<NcPoly, HopfError> {
        let images = self.antipode_images()?;
        let raw = extend_morphism(
            f,
            images,
            &NcPoly::one(&self.spec),
            MorphismDirection::AntiHomomorphism,
        )?;
        Ok(self.system.normal_form(&raw))
    }

    /// Apply Δ to the chosen slot of an arity-2 tensor, producing arity 3.
    fn delta_on_slot(&self, t: &TensorPoly, slot: usize) -> Result<TensorPoly, HopfError> {
        let mut out = TensorPoly::zero(3);
        for (key, c) in t.terms() {
            let inner = self.coproduct(&NcPoly::word(key[slot].clone(), &self.spec))?;
            for (ik, ic) in inner.terms() {
                let slots = if slot == 0 {
                    alloc::vec![ik[0].clone(), ik[1].clone(), key[1].clone()]
                } else {
                    alloc::vec![key[0].clone(), ik[0].clone(), ik[1].clone()]
                };
                out.add_term(slots, c.mul(ic));
            }
        }
        Ok(out)
    }

    /// (ε⊗id)Δ(f) when `slot == 0`, (id⊗ε)Δ(f) when `slot == 1`.
    fn counit_contraction(&self, f: &NcPoly, slot: usize) -> Result<NcPoly, HopfError> {
        let d = self.coproduct(f)?;
        let mut out = NcPoly::zero();
        for (key, c) in d.terms() {
            let eps = self.counit(&NcPoly::word(key[slot].clone(), &self.spec))?;
            out.add_term(key[1 - slot].clone(), c.mul(&eps));
        }
        Ok(self.system.normal_form(&out))
    }

    /// m(S⊗id)Δ(f) when `antipode_slot == 0`, m(id⊗S)Δ(f) when 1.
    fn antipode_convolution(&self, f: &NcPoly, antipode_slot: usize) -> Result<NcPoly, HopfError> {
        let d = self.coproduct(f)?;
        let mut out = NcPoly::zero();
        for (key, c) in d.terms() {
            let sw = self.antipode(&NcPoly::word(key[antipode_slot].clone(), &self.spec))?;
            let other = NcPoly::word(key[1 - antipode_slot].clone(), &self.spec);
            let prod = if antipode_slot == 0 {
                sw.multiply(&other)
            } else {
                other.multiply(&sw)
            };
            out.add_assign(&prod.scaled(c));
        }
        Ok(self.system.normal_form(&out))
    }

    fn relation_polys(&self) -> Vec<NcPoly> {
        self.system
            .rules()
            .iter()
            .map(|r| r.relation(&self.spec.one()))
            .collect()
    }

    /// Δ and ε respect every relation; Δ is coassociative and counital on all
    /// generators and basis words of weight ≤ 6.
    pub fn check_bialgebra(&self) -> Result<StructReport, HopfError> {
        self.delta_images()?;
        let mut report = StructReport::default();
        for (i, rel) in self.relation_polys().iter().enumerate() {
            let d = self.coproduct(rel)?;
            report.record(d.is_zero(), || {
                format!("coproduct does not annihilate relation #{i}: {}", self.render_poly(rel))
            });
            let eps = self.counit(rel)?;
            report.record(eps.is_zero(), || {
                format!("counit does not annihilate relation #{i}: {}", self.render_poly(rel))
            });
        }
        let mut words: Vec<Word> = (0..self.num_generators()).map(Word::generator).collect();
        words.extend(self.basis_words(6).words);
        for w in &words {
            let f = NcPoly::word(w.clone(), &self.spec);
            let d = self.coproduct(&f)?;
            let left = self.delta_on_slot(&d, 0)?;
            let right = self.delta_on_slot(&d, 1)?;
            report.record(left == right, || {
                format!("coassociativity fails on {}", self.render_word(w))
            });
            let nf = self.system.normal_form(&f);
            let lc = self.counit_contraction(&f, 0)?;
            let rc = self.counit_contraction(&f, 1)?;
            report.record(lc == nf && rc == nf, || {
                format!("counit law fails on {}", self.render_word(w))
            });
        }
        Ok(report)
    }

    /// S is a convolution inverse of the identity on generators and a sample
    /// of basis words, and anti-respects every relation.
    pub fn check_antipode(&self) -> Result<StructReport, HopfError> {
        let images = self.antipode_images()?.to_vec();
        let mut report = StructReport::default();
        for (i, rel) in self.relation_polys().iter().enumerate() {
            let s = extend_morphism(
                rel,
                &images,
                &NcPoly::one(&self.spec),
                MorphismDirection::AntiHomomorphism,
            )?;
            report.record(self.system.normal_form(&s).is_zero(), || {
                format!("antipode does not annihilate relation #{i}: {}", self.render_poly(rel))
            });
        }
        let mut words: Vec<Word> = (0..self.num_generators()).map(Word::generator).collect();
        words.extend(self.sample_basis_words(100));
        for w in &words {
            let f = NcPoly::word(w.clone(), &self.spec);
            let eps = self.counit(&f)?;
            let expect = NcPoly::term(Word::empty(), eps);
            let left = self.antipode_convolution(&f, 0)?;
            let right = self.antipode_convolution(&f, 1)?;
            report.record(left == expect, || {
                format!("m(S⊗id)Δ fails on {}", self.render_word(w))
            });
            report.record(right == expect, || {
                format!("m(id⊗S)Δ fails on {}", self.render_word(w))
            });
        }
        Ok(report)
    }

    /// A fixed-seed pseudorandom sample of basis words of weight ≤ 8.
    pub fn sample_basis_words(&self, count: usize) -> Vec<Word> {
        let pool = self.basis_words(8).words;
        if pool.is_empty() {
            return Vec::new();
        }
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            // xorshift64
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            out.push(pool[(state % pool.len() as u64) as usize].clone());
        }
        out
    }

    /// True iff f commutes with every generator modulo the relations.
    pub fn is_central(&self, f: &NcPoly) -> bool {
        (0..self.num_generators()).all(|i| {
            let g = self.generator_poly(i);
            self.system
                .normal_form(&f.multiply(&g).sub(&g.multiply(f)))
                .is_zero()
        })
    }

    /// True iff Δ(f) = g_left ⊗ f + f ⊗ g_right exactly.
    pub fn is_skew_primitive(
        &self,
        f: &NcPoly,
        g_left: &Word,
        g_right: &Word,
    ) -> Result<bool, HopfError> {
        let nf = self.system.normal_form(f);
        let gl = NcPoly::word(g_left.clone(), &self.spec);
        let gr = NcPoly::word(g_right.clone(), &self.spec);
        let mut expect = TensorPoly::pure(&[gl, nf.clone()], &self.spec);
        expect.add_assign(&TensorPoly::pure(&[nf, gr], &self.spec));
        Ok(self.coproduct(f)? == self.tensor_normal_form(&expect))
    }

    /// NF(lhs − rhs) = 0.
    pub fn verify_identity(&self, lhs: &NcPoly, rhs: &NcPoly) -> bool {
        self.system.normal_form(&lhs.sub(rhs)).is_zero()
    }

    /// Least-degree monic polynomial annihilating f, or independence verdict.
    pub fn min_poly(&self, f: &NcPoly, max_degree: usize) -> Result<MinPolyResult, HopfError> {
        let mut powers = Vec::with_capacity(max_degree + 1);
        powers.push(NcPoly::one(&self.spec));
        for d in 1..=max_degree {
            let next = self.system.normal_form(&powers[d - 1].multiply(f));
            powers.push(next);
        }
        // column index per support word across all powers
        let mut cols: BTreeMap<Word, usize> = BTreeMap::new();
        for p in &powers {
            for (w, _) in p.terms() {
                let next = cols.len();
                cols.entry(w.clone()).or_insert(next);
            }
        }
        let dim = cols.len();
        let vectorize = |p: &NcPoly| -> Vec<FieldElement> {
            let mut v = alloc::vec![self.spec.zero(); dim];
            for (w, c) in p.terms() {
                v[cols[w]] = c.clone();
            }
            v
        };
        for d in 1..=max_degree {
            let mut rows = alloc::vec![alloc::vec![self.spec.zero(); d]; dim];
            for (j, p) in powers.iter().take(d).enumerate() {
                for (i, e) in vectorize(p).into_iter().enumerate() {
                    rows[i][j] = e;
                }
            }
            let m = crate::linalg::ExactMatrix::from_rows(&rows, &self.spec);
            if let Some(x) = m.solve(&vectorize(&powers[d])) {
                let mut coeffs: Vec<FieldElement> = x.iter().map(|c| c.negated()).collect();
                coeffs.push(self.spec.one());
                return Ok(MinPolyResult::Poly(coeffs));
            }
        }
        Ok(MinPolyResult::IndependentUpTo(max_degree))
    }

    /// Σ cᵢ fⁱ for monic coefficient vectors, reduced.
    pub fn eval_poly(&self, coeffs: &[FieldElement], f: &NcPoly) -> NcPoly {
        let mut acc = NcPoly::zero();
        let mut power = NcPoly::one(&self.spec);
        for c in coeffs {
            acc.add_assign(&power.scaled(c));
            power = self.system.normal_form(&power.multiply(f));
        }
        self.system.normal_form(&acc)
    }

    /// Right-coideal check: for each subalgebra generator u, every left
    /// tensor factor of Δ(u) must lie in the span of the subalgebra.
    pub fn coideal_subalgebra_check(
        &self,
        gens: &[NcPoly],
        max_weight: u64,
    ) -> Result<CoidealReport, HopfError> {
        let basis = self.basis_words(max_weight).words;
        let cols: BTreeMap<Word, usize> =
            basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut span = SparseEchelon::new(basis.len(), &self.spec);
        let sparse_row = |p: &NcPoly| -> Option<BTreeMap<usize, FieldElement>> {
            let mut row = BTreeMap::new();
            for (w, c) in p.terms() {
                row.insert(*cols.get(w)?, c.clone());
            }
            Some(row)
        };
        // multiplicatively close the span of 1 and the generators, capped at
        // max_weight
        let mut queue = alloc::vec![NcPoly::one(&self.spec)];
        let mut stored: Vec<NcPoly> = Vec::new();
        while let Some(e) = queue.pop() {
            let Some(row) = sparse_row(&e) else { continue };
            if !span.insert(row) {
                continue;
            }
            stored.push(e.clone());
            for g in gens {
                let prod = self.system.normal_form(&e.multiply(g));
                let within = prod
                    .terms()
                    .all(|(w, _)| self.word_weight(w) <= max_weight);
                if within {
                    queue.push(prod);
                }
            }
        }
        let mut report = CoidealReport {
            subalgebra_dim: span.rank(),
            checks: 0,
            failures: Vec::new(),
        };
        for (gi, u) in gens.iter().enumerate() {
            let d = self.coproduct(u)?;
            // group the left factors by the right-slot word
            let mut by_right: BTreeMap<Word, NcPoly> = BTreeMap::new();
            for (key, c) in d.terms() {
                by_right
                    .entry(key[1].clone())
                    .or_default()
                    .add_term(key[0].clone(), c.clone());
            }
            for (rw, left) in &by_right {
                report.checks += 1;
                let ok = match sparse_row(left) {
                    Some(row) => span.reduce(&row).is_empty(),
                    None => false,
                };
                if !ok {
                    report.failures.push(format!(
                        "generator #{gi}: left factor {} (against {}) escapes the subalgebra",
                        self.render_poly(left),
                        self.render_word(rw)
                    ));
                }
            }
        }
        Ok(report)
    }

    /// Closure of the span of irreducible words over a subalphabet under
    /// multiplication, Δ (both legs) and S.
    pub fn hopf_subalgebra_check(
        &self,
        subalphabet: &[usize],
        max_weight: u64,
    ) -> Result<HopfSubReport, HopfError> {
        let mut allowed = alloc::vec![false; self.num_generators()];
        for &g in subalphabet {
            allowed[g] = true;
        }
        let words_ok = |p: &NcPoly| -> bool {
            p.terms().all(|(w, _)| w.letters().all(|g| allowed[g]))
        };
        let tensor_ok = |t: &TensorPoly| -> bool {
            t.terms()
                .all(|(key, _)| key.iter().all(|w| w.letters().all(|g| allowed[g])))
        };
        let basis = self
            .system
            .enumerate_basis_restricted(&self.trunc_weights, max_weight, &allowed);
        let mut report = HopfSubReport {
            dimension: basis.total(),
            enumerated: basis.words.len(),
            mult_failures: Vec::new(),
            delta_failures: Vec::new(),
            antipode_failures: Vec::new(),
        };
        for w1 in &basis.words {
            for w2 in &basis.words {
                if self.word_weight(w1) + self.word_weight(w2) > max_weight {
                    continue;
                }
                let prod = self
                    .system
                    .normal_form(&NcPoly::word(w1.concat(w2), &self.spec));
                if !words_ok(&prod) {
                    report.mult_failures.push(format!(
                        "{} * {} leaves the subalgebra",
                        self.render_word(w1),
                        self.render_word(w2)
                    ));
                }
            }
        }
        for w in &basis.words {
            let f = NcPoly::word(w.clone(), &self.spec);
            if !tensor_ok(&self.coproduct(&f)?) {
                report
                    .delta_failures
                    .push(format!("coproduct of {} leaves the subalgebra", self.render_word(w)));
            }
            if !words_ok(&self.antipode(&f)?) {
                report
                    .antipode_failures
                    .push(format!("antipode of {} leaves the subalgebra", self.render_word(w)));
            }
        }
        Ok(report)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for g in w.letters() {
            out.push_str(&self.gen_names[g]);
        }
        out
    }

    pub fn render_poly(&self, f: &NcPoly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in f.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("({c})"));
            if !w.is_empty() {
                out.push('*');
                out.push_str(&self.render_word(w));
            }
        }
        out
    }
}
