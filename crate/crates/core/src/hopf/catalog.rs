//! Built-in algebra presentations.
//!
//! The main family lives on the alphabet a, b, F, s, t: a quantum-group-like
//! Hopf algebra whose commutative subalgebra on s, t is the coordinate ring
//! of the nodal cubic. Variants add one extra relation each:
//!
//! * `Atilde` — the thirteen skew-commutation rules alone,
//! * `A` — plus F³ = 0,
//! * `Agen` — plus the central element c = F³ + (3r+6)(x²+x³) set to zero,
//! * `D` — plus F³ = 0 and x² + x³ = 0,
//! * `B` — just the nodal-cubic coordinate ring on s, t,
//! * `AtildeRfree` — a presentation on a, b, x, y that avoids the cube root
//!   of unity and therefore works over the plain rationals.
//!
//! Parameters (p, q) with p² = q² + q³ translate the skew-primitive
//! generators: s = x + qa and t = y + pb.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{FieldElement, FieldSpec};
use crate::freealg::{NcPoly, Word};
use crate::hopf::{CoalgebraTag, HopfError, HopfPresentation};
use crate::rewrite::{MonomialOrder, RewriteError, RewriteSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    Atilde,
    A,
    Agen,
    D,
    B,
    AtildeRfree,
}

impl AlgebraName {
    pub fn parse(s: &str) -> Option<AlgebraName> {
        match s {
            "Atilde" => Some(AlgebraName::Atilde),
            "A" => Some(AlgebraName::A),
            "Agen" => Some(AlgebraName::Agen),
            "D" => Some(AlgebraName::D),
            "B" => Some(AlgebraName::B),
            "Atilde-rfree" => Some(AlgebraName::AtildeRfree),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraName::Atilde => "Atilde",
            AlgebraName::A => "A",
            AlgebraName::Agen => "Agen",
            AlgebraName::D => "D",
            AlgebraName::B => "B",
            AlgebraName::AtildeRfree => "Atilde-rfree",
        }
    }

    pub fn all() -> [AlgebraName; 6] {
        [
            AlgebraName::Atilde,
            AlgebraName::A,
            AlgebraName::Agen,
            AlgebraName::D,
            AlgebraName::B,
            AlgebraName::AtildeRfree,
        ]
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Parameter preset: (p, q) = (0, 0) or (6, 3). Both satisfy p² = q² + q³
/// (36 = 9 + 27); all valid choices give isomorphic comodule algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PqPreset {
    Zero,
    SixThree,
}

impl PqPreset {
    pub fn parse(s: &str) -> Option<PqPreset> {
        match s {
            "0,0" => Some(PqPreset::Zero),
            "6,3" => Some(PqPreset::SixThree),
            _ => None,
        }
    }

    pub fn values(&self, spec: &FieldSpec) -> (FieldElement, FieldElement) {
        match self {
            PqPreset::Zero => (spec.zero(), spec.zero()),
            PqPreset::SixThree => (spec.integer(6), spec.integer(3)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    /// The presentation needs a primitive cube root of unity in the field.
    RootRequired,
    Hopf(HopfError),
    Rewrite(RewriteError),
}

impl From<HopfError> for CatalogError {
    fn from(e: HopfError) -> CatalogError {
        CatalogError::Hopf(e)
    }
}

impl From<RewriteError> for CatalogError {
    fn from(e: RewriteError) -> CatalogError {
        CatalogError::Rewrite(e)
    }
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::RootRequired => {
                write!(f, "this presentation needs a primitive cube root of unity in the field")
            }
            CatalogError::Hopf(e) => write!(f, "{e}"),
            CatalogError::Rewrite(e) => write!(f, "{e}"),
        }
    }
}

/// Generator indices of the main a, b, F, s, t alphabet.
pub const GA: usize = 0;
pub const GB: usize = 1;
pub const GF: usize = 2;
pub const GS: usize = 3;
pub const GT: usize = 4;

fn word(letters: &[usize]) -> Word {
    Word::from_letters(letters)
}

fn term(c: FieldElement, letters: &[usize]) -> NcPoly {
    NcPoly::term(word(letters), c)
}

/// Build a catalog presentation over the given field and parameter preset.
pub fn build(
    name: AlgebraName,
    spec: &FieldSpec,
    preset: PqPreset,
) -> Result<HopfPresentation, CatalogError> {
    match name {
        AlgebraName::B => build_b(spec, preset),
        AlgebraName::AtildeRfree => build_rfree(spec),
        _ => build_main(name, spec, preset),
    }
}

/// The thirteen rewriting relations of the main family, as relation
/// polynomials (each read as "= 0").
fn main_relations(
    spec: &FieldSpec,
    p: &FieldElement,
    q: &FieldElement,
) -> Result<Vec<NcPoly>, CatalogError> {
    let r = spec.root().map_err(|_| CatalogError::RootRequired)?;
    let one = spec.one();
    let third = spec.ratio(1, 3);
    // (r+2)/3 and (1+3q)
    let r_plus_2_over_3 = r.add(&spec.integer(2)).mul(&third);
    let one_plus_3q = one.add(&q.mul(&spec.integer(3)));
    let r_minus_1_over_3 = r.sub(&spec.integer(1)).mul(&third);

    let mut rels = Vec::new();
    // ba = ab
    rels.push(term(one.clone(), &[GB, GA]).sub(&term(one.clone(), &[GA, GB])));
    // b² = 1
    rels.push(term(one.clone(), &[GB, GB]).sub(&NcPoly::one(spec)));
    // a³ = 1
    rels.push(term(one.clone(), &[GA, GA, GA]).sub(&NcPoly::one(spec)));
    // Fa = r·aF
    rels.push(term(one.clone(), &[GF, GA]).sub(&term(r.clone(), &[GA, GF])));
    // Fb = bF
    rels.push(term(one.clone(), &[GF, GB]).sub(&term(one.clone(), &[GB, GF])));
    // sa = −(r+1)·as + F + (r+2)/3·((1+3q)a² − a)
    let mut rel = term(one.clone(), &[GS, GA]);
    rel.add_assign(&term(r.add(&one), &[GA, GS]));
    rel.add_assign(&term(one.negated(), &[GF]));
    rel.add_assign(&term(
        r_plus_2_over_3.mul(&one_plus_3q).negated(),
        &[GA, GA],
    ));
    rel.add_assign(&term(r_plus_2_over_3.clone(), &[GA]));
    rels.push(rel);
    // sb = bs
    rels.push(term(one.clone(), &[GS, GB]).sub(&term(one.clone(), &[GB, GS])));
    // sF = r·Fs + (1+3q)/3·(r+2)·aF + (r−1)/3·F + 1/3·(a−1)
    let mut rel = term(one.clone(), &[GS, GF]);
    rel.add_assign(&term(r.negated(), &[GF, GS]));
    rel.add_assign(&term(r_plus_2_over_3.mul(&one_plus_3q).negated(), &[GA, GF]));
    rel.add_assign(&term(r_minus_1_over_3.negated(), &[GF]));
    rel.add_assign(&term(third.negated(), &[GA]));
    rel.add_assign(&term(third.clone(), &[]));
    rels.push(rel);
    // ta = at
    rels.push(term(one.clone(), &[GT, GA]).sub(&term(one.clone(), &[GA, GT])));
    // tb = −bt + 2p·b²
    let mut rel = term(one.clone(), &[GT, GB]);
    rel.add_assign(&term(one.clone(), &[GB, GT]));
    rel.add_assign(&term(p.mul(&spec.integer(2)).negated(), &[GB, GB]));
    rels.push(rel);
    // tF = Ft
    rels.push(term(one.clone(), &[GT, GF]).sub(&term(one.clone(), &[GF, GT])));
    // ts = st
    rels.push(term(one.clone(), &[GT, GS]).sub(&term(one.clone(), &[GS, GT])));
    // t² = s² + s³
    let mut rel = term(one.clone(), &[GT, GT]);
    rel.add_assign(&term(one.negated(), &[GS, GS]));
    rel.add_assign(&term(one.negated(), &[GS, GS, GS]));
    rels.push(rel);
    Ok(rels)
}

fn main_order() -> MonomialOrder {
    MonomialOrder::new(alloc::vec![0, 0, 2, 2, 4])
}

fn main_trunc_weights() -> Vec<u64> {
    alloc::vec![0, 0, 2, 2, 3]
}

fn main_tags(p: &FieldElement, q: &FieldElement) -> Vec<CoalgebraTag> {
    let a = Word::generator(GA);
    let a2 = word(&[GA, GA]);
    let b = Word::generator(GB);
    let mut s_extra = Vec::new();
    if !q.is_zero() {
        s_extra.push((q.negated(), Word::empty(), a.clone()));
    }
    let mut t_extra = Vec::new();
    if !p.is_zero() {
        t_extra.push((p.negated(), Word::empty(), b.clone()));
    }
    alloc::vec![
        CoalgebraTag::GroupLike,
        CoalgebraTag::GroupLike,
        CoalgebraTag::SkewPrimitive { g_left: a.clone(), g_right: a2, extra: Vec::new() },
        CoalgebraTag::SkewPrimitive { g_left: Word::empty(), g_right: a, extra: s_extra },
        CoalgebraTag::SkewPrimitive { g_left: Word::empty(), g_right: b, extra: t_extra },
    ]
}

/// x = s − qa and y = t − pb: the untranslated skew-primitives.
fn xy_aliases(spec: &FieldSpec, p: &FieldElement, q: &FieldElement) -> (NcPoly, NcPoly) {
    let mut x = term(spec.one(), &[GS]);
    x.add_assign(&term(q.negated(), &[GA]));
    let mut y = term(spec.one(), &[GT]);
    y.add_assign(&term(p.negated(), &[GB]));
    (x, y)
}

/// The central element c expressed in x and a; no root of unity involved.
fn c_element(spec: &FieldSpec, x: &NcPoly, a: &NcPoly) -> NcPoly {
    let xa = x.multiply(a);
    let xa2 = xa.multiply(&xa);
    let a2 = a.multiply(a);
    let mut c = xa2.multiply(&xa);
    c.add_assign(&a.multiply(&xa2).multiply(x).scaled(&spec.integer(2)));
    c.add_assign(&a.multiply(&xa2));
    c.add_assign(&a2.multiply(&xa).multiply(x).multiply(x).scaled(&spec.integer(-3)));
    c.add_assign(&a2.multiply(&xa).multiply(x).scaled(&spec.integer(-2)));
    c.add_assign(&xa.multiply(x).negated());
    c.add_assign(&a.multiply(x).multiply(x));
    c.add_assign(&a.multiply(x));
    c.add_assign(&x.multiply(x).scaled(&spec.integer(-2)));
    c.add_assign(&x.scaled(&spec.integer(-2)));
    c
}

fn main_aliases(
    spec: &FieldSpec,
    system: &RewriteSystem,
    p: &FieldElement,
    q: &FieldElement,
) -> BTreeMap<String, NcPoly> {
    let r = spec.root().expect("main family requires a root");
    let (x, y) = xy_aliases(spec, p, q);
    let a = term(spec.one(), &[GA]);
    let third = spec.ratio(1, 3);

    // E = xa − r·ax + (1−r)/3·(a − a²)
    let mut e = x.multiply(&a);
    e.add_assign(&a.multiply(&x).scaled(&r.negated()));
    let one_minus_r_over_3 = spec.one().sub(&r).mul(&third);
    e.add_assign(&term(one_minus_r_over_3.clone(), &[GA]));
    e.add_assign(&term(one_minus_r_over_3.negated(), &[GA, GA]));

    let k = term(spec.one(), &[GA, GA]);
    let f = term(spec.one(), &[GF]);

    // Ω = EF + (r²K + rK²)/(r − r²)², and (r − r²)² = −3
    let r2 = r.mul(&r);
    let mut omega = e.multiply(&f);
    omega.add_assign(&k.scaled(&r2.mul(&third).negated()));
    omega.add_assign(&k.multiply(&k).scaled(&r.mul(&third).negated()));

    let c = c_element(spec, &x, &a);

    // z = (Ω − 1/3)(Ω + 2/3)
    let om_minus = omega.sub(&NcPoly::term(Word::empty(), third.clone()));
    let om_plus = omega.add(&NcPoly::term(Word::empty(), spec.ratio(2, 3)));
    let z = om_minus.multiply(&om_plus);

    let mut out = BTreeMap::new();
    for (name, poly) in [
        ("x", x),
        ("y", y),
        ("E", e),
        ("K", k),
        ("Omega", omega),
        ("c", c),
        ("z", z),
    ] {
        out.insert(name.to_string(), system.normal_form(&poly));
    }
    out
}

fn build_main(
    name: AlgebraName,
    spec: &FieldSpec,
    preset: PqPreset,
) -> Result<HopfPresentation, CatalogError> {
    let (p, q) = preset.values(spec);
    let mut rels = main_relations(spec, &p, &q)?;
    let (x, _) = xy_aliases(spec, &p, &q);
    let x2 = x.multiply(&x);
    let x2_plus_x3 = x2.add(&x2.multiply(&x));
    let f_cubed = term(spec.one(), &[GF, GF, GF]);
    match name {
        AlgebraName::Atilde => {}
        AlgebraName::A => rels.push(f_cubed),
        AlgebraName::Agen => {
            // c = F³ + (3r+6)(x²+x³) set to zero
            let r = spec.root().map_err(|_| CatalogError::RootRequired)?;
            let coef = r.mul(&spec.integer(3)).add(&spec.integer(6));
            let mut rel = f_cubed;
            rel.add_assign(&x2_plus_x3.scaled(&coef));
            rels.push(rel);
        }
        AlgebraName::D => {
            rels.push(f_cubed);
            rels.push(x2_plus_x3);
        }
        AlgebraName::B | AlgebraName::AtildeRfree => unreachable!(),
    }
    let system = RewriteSystem::from_relations(main_order(), &rels)?;
    let aliases = main_aliases(spec, &system, &p, &q);
    let names = ["a", "b", "F", "s", "t"].map(String::from).to_vec();
    Ok(HopfPresentation::new(
        spec.clone(),
        names,
        system,
        main_trunc_weights(),
        Some(main_tags(&p, &q)),
        aliases,
        p,
        q,
    )?)
}

/// The nodal-cubic coordinate ring on s, t alone: no coalgebra structure of
/// its own (the coproduct of s and t needs the big algebra).
fn build_b(spec: &FieldSpec, preset: PqPreset) -> Result<HopfPresentation, CatalogError> {
    let (p, q) = preset.values(spec);
    let one = spec.one();
    // s = 0, t = 1
    let ts = NcPoly::term(word(&[1, 0]), one.clone()).sub(&NcPoly::term(word(&[0, 1]), one.clone()));
    let mut tt = NcPoly::term(word(&[1, 1]), one.clone());
    tt.add_assign(&NcPoly::term(word(&[0, 0]), one.negated()));
    tt.add_assign(&NcPoly::term(word(&[0, 0, 0]), one.negated()));
    let system =
        RewriteSystem::from_relations(MonomialOrder::new(alloc::vec![2, 4]), &[ts, tt])?;
    let names = ["s", "t"].map(String::from).to_vec();
    Ok(HopfPresentation::new(
        spec.clone(),
        names,
        system,
        alloc::vec![2, 3],
        None,
        BTreeMap::new(),
        p,
        q,
    )?)
}

/// Presentation on a, b, x, y valid over any field: the commutation and
/// symmetrization relations with the cube root of unity eliminated. The
/// initial relation set is not confluent; bounded completion closes it.
fn build_rfree(spec: &FieldSpec) -> Result<HopfPresentation, CatalogError> {
    // a = 0, b = 1, x = 2, y = 3
    let one = spec.one();
    let t = |c: FieldElement, l: &[usize]| NcPoly::term(word(l), c);
    let mut rels = Vec::new();
    // ba = ab, b² = 1, a³ = 1
    rels.push(t(one.clone(), &[1, 0]).sub(&t(one.clone(), &[0, 1])));
    rels.push(t(one.clone(), &[1, 1]).sub(&NcPoly::one(spec)));
    rels.push(t(one.clone(), &[0, 0, 0]).sub(&NcPoly::one(spec)));
    // xb = bx, ya = ay, yb = −by, yx = xy
    rels.push(t(one.clone(), &[2, 1]).sub(&t(one.clone(), &[1, 2])));
    rels.push(t(one.clone(), &[3, 0]).sub(&t(one.clone(), &[0, 3])));
    rels.push(t(one.clone(), &[3, 1]).add(&t(one.clone(), &[1, 3])));
    rels.push(t(one.clone(), &[3, 2]).sub(&t(one.clone(), &[2, 3])));
    // x + axa² + a²xa − a + 1 = 0
    let mut rel = t(one.clone(), &[2]);
    rel.add_assign(&t(one.clone(), &[0, 2, 0, 0]));
    rel.add_assign(&t(one.clone(), &[0, 0, 2, 0]));
    rel.add_assign(&t(one.negated(), &[0]));
    rel.add_assign(&NcPoly::one(spec));
    rels.push(rel);
    // x² + ax²a² + xaxa² + x + axa² = 0
    let mut rel = t(one.clone(), &[2, 2]);
    rel.add_assign(&t(one.clone(), &[0, 2, 2, 0, 0]));
    rel.add_assign(&t(one.clone(), &[2, 0, 2, 0, 0]));
    rel.add_assign(&t(one.clone(), &[2]));
    rel.add_assign(&t(one.clone(), &[0, 2, 0, 0]));
    rels.push(rel);
    // y² = x² + x³
    let mut rel = t(one.clone(), &[3, 3]);
    rel.add_assign(&t(one.negated(), &[2, 2]));
    rel.add_assign(&t(one.negated(), &[2, 2, 2]));
    rels.push(rel);

    let order = MonomialOrder::new(alloc::vec![0, 0, 2, 4]);
    let trunc = alloc::vec![0u64, 0, 2, 3];
    let system = RewriteSystem::from_relations(order, &rels)?;
    let (system, _status) = system.complete(&trunc, 8)?;

    let a = Word::generator(0);
    let b = Word::generator(1);
    let tags = alloc::vec![
        CoalgebraTag::GroupLike,
        CoalgebraTag::GroupLike,
        CoalgebraTag::SkewPrimitive {
            g_left: Word::empty(),
            g_right: a.clone(),
            extra: Vec::new()
        },
        CoalgebraTag::SkewPrimitive {
            g_left: Word::empty(),
            g_right: b,
            extra: Vec::new()
        },
    ];
    let x = t(one.clone(), &[2]);
    let a_poly = t(one.clone(), &[0]);
    let mut aliases = BTreeMap::new();
    aliases.insert("K".to_string(), system.normal_form(&t(one.clone(), &[0, 0])));
    aliases.insert(
        "c".to_string(),
        system.normal_form(&c_element(spec, &x, &a_poly)),
    );
    let names = ["a", "b", "x", "y"].map(String::from).to_vec();
    Ok(HopfPresentation::new(
        spec.clone(),
        names,
        system,
        trunc,
        Some(tags),
        aliases,
        spec.zero(),
        spec.zero(),
    )?)
}

/// Negative control: the main family at (0,0) with the commutation relation
/// ta = at dropped. The remaining relations no longer span a coideal, so
/// coproduct compatibility must fail.
pub fn corrupted_commutation(spec: &FieldSpec) -> Result<HopfPresentation, CatalogError> {
    let (p, q) = PqPreset::Zero.values(spec);
    let mut rels = main_relations(spec, &p, &q)?;
    // relation #8 is ta − at
    rels.remove(8);
    let system = RewriteSystem::from_relations(main_order(), &rels)?;
    let names = ["a", "b", "F", "s", "t"].map(String::from).to_vec();
    Ok(HopfPresentation::new(
        spec.clone(),
        names,
        system,
        main_trunc_weights(),
        Some(main_tags(&p, &q)),
        BTreeMap::new(),
        p,
        q,
    )?)
}

/// Negative control: the main family at (0,0) with the antipode image of s
/// given the wrong sign.
pub fn corrupted_antipode(spec: &FieldSpec) -> Result<HopfPresentation, CatalogError> {
    let mut h = build(AlgebraName::Atilde, spec, PqPreset::Zero)?;
    let bad = h.normal_form(&term(spec.one(), &[GS, GA, GA]));
    h.override_antipode_image(GS, bad);
    Ok(h)
}

/// Negative control: the main family at (0,0) with ba = ab replaced by
/// ba = b. The overlap b·b·a then resolves two ways (to a and to 1), so
/// confluence must fail.
pub fn corrupted_confluence(spec: &FieldSpec) -> Result<RewriteSystem, CatalogError> {
    let (p, q) = PqPreset::Zero.values(spec);
    let mut rels = main_relations(spec, &p, &q)?;
    rels[0] = term(spec.one(), &[GB, GA]).sub(&term(spec.one(), &[GB]));
    Ok(RewriteSystem::from_relations(main_order(), &rels)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::TensorPoly;

    fn atilde() -> HopfPresentation {
        build(AlgebraName::Atilde, &FieldSpec::Cyclotomic3, PqPreset::Zero).unwrap()
    }

    #[test]
    fn atilde_is_confluent() {
        let h = atilde();
        let report = h.system().check_confluence();
        assert!(report.is_confluent(), "failures: {:?}", report.failures.len());
        assert_eq!(h.system().rules().len(), 13);
    }

    #[test]
    fn coproduct_of_f() {
        let spec = FieldSpec::Cyclotomic3;
        let h = atilde();
        let f = h.generator_poly(GF);
        let d = h.coproduct(&f).unwrap();
        let mut expect = TensorPoly::term(
            alloc::vec![Word::generator(GA), Word::generator(GF)],
            spec.one(),
        );
        expect.add_term(
            alloc::vec![Word::generator(GF), word(&[GA, GA])],
            spec.one(),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn antipode_of_f_is_minus_r_f() {
        let spec = FieldSpec::Cyclotomic3;
        let h = atilde();
        let s_f = h.antipode(&h.generator_poly(GF)).unwrap();
        let expect = term(spec.root().unwrap().negated(), &[GF]);
        assert_eq!(s_f, expect);
    }

    #[test]
    fn counit_values() {
        let spec = FieldSpec::Cyclotomic3;
        let h = atilde();
        assert_eq!(h.counit(&h.generator_poly(GA)).unwrap(), spec.one());
        assert!(h.counit(&h.generator_poly(GF)).unwrap().is_zero());
        assert!(h.counit(&h.generator_poly(GS)).unwrap().is_zero());
    }

    #[test]
    fn translated_counits_at_6_3() {
        let spec = FieldSpec::Cyclotomic3;
        let h = build(AlgebraName::Atilde, &spec, PqPreset::SixThree).unwrap();
        assert_eq!(h.counit(&h.generator_poly(GS)).unwrap(), spec.integer(3));
        assert_eq!(h.counit(&h.generator_poly(GT)).unwrap(), spec.integer(6));
        // x and y stay honest skew-primitives
        let x = h.alias("x").unwrap().clone();
        assert!(h
            .is_skew_primitive(&x, &Word::empty(), &Word::generator(GA))
            .unwrap());
    }

    #[test]
    fn basis_counts_up_to_weight_two() {
        let h = atilde();
        let basis = h.basis_words(2);
        // 6 group-algebra words, plus a^i b^j multiplied by one of F, s
        assert_eq!(basis.words.len(), 18);
        assert!(!basis.exact);
    }

    #[test]
    fn f_cubed_central_in_atilde() {
        let spec = FieldSpec::Cyclotomic3;
        let h = atilde();
        let f3 = term(spec.one(), &[GF, GF, GF]);
        assert!(h.is_central(&f3));
        assert!(!h.is_central(&h.generator_poly(GF)));
    }

    #[test]
    fn d_system_reduces_t_squared_to_zero() {
        let spec = FieldSpec::Cyclotomic3;
        let h = build(AlgebraName::D, &spec, PqPreset::Zero).unwrap();
        let tt = term(spec.one(), &[GT, GT]);
        assert!(h.normal_form(&tt).is_zero());
        let s3 = term(spec.one(), &[GS, GS, GS]);
        let s2 = term(spec.one(), &[GS, GS]);
        assert_eq!(h.normal_form(&s3), s2.negated());
        assert!(h.system().check_confluence().is_confluent());
    }

    #[test]
    fn agen_over_f7_ties_f_cubed_to_s_powers() {
        let spec = FieldSpec::f7();
        let h = build(AlgebraName::Agen, &spec, PqPreset::Zero).unwrap();
        // c → 0 makes F³ a multiple of s² + s³: F³ = −(3r + 6)(s² + s³)
        let f3 = term(spec.one(), &[GF, GF, GF]);
        let coef = spec
            .root()
            .unwrap()
            .mul(&spec.integer(3))
            .add(&spec.integer(6))
            .negated();
        let mut expect = term(coef.clone(), &[GS, GS]);
        expect.add_assign(&term(coef, &[GS, GS, GS]));
        assert_eq!(h.normal_form(&f3), h.normal_form(&expect));
    }

    #[test]
    fn b_is_plain_commutative_algebra() {
        let spec = FieldSpec::Rational;
        let h = build(AlgebraName::B, &spec, PqPreset::Zero).unwrap();
        assert!(!h.has_coalgebra());
        // ts → st and t² → s² + s³
        let ts = NcPoly::term(word(&[1, 0]), spec.one());
        assert_eq!(h.normal_form(&ts), NcPoly::term(word(&[0, 1]), spec.one()));
        let basis = h.basis_words(6);
        // 1, s, s², s³, t, st, s²t, s³t (t² reduces; weight caps the rest)
        assert!(basis.words.contains(&word(&[0, 1])));
        assert!(!basis.words.contains(&word(&[1, 1])));
    }

    #[test]
    fn rfree_presentation_builds_over_q() {
        let spec = FieldSpec::Rational;
        let h = build(AlgebraName::AtildeRfree, &spec, PqPreset::Zero).unwrap();
        // y² reduces into x-terms
        let yy = NcPoly::term(word(&[3, 3]), spec.one());
        let mut expect = NcPoly::term(word(&[2, 2]), spec.one());
        expect.add_assign(&NcPoly::term(word(&[2, 2, 2]), spec.one()));
        assert_eq!(h.normal_form(&yy), expect);
    }

    #[test]
    fn rational_spec_rejected_for_main_family() {
        let err = build(AlgebraName::Atilde, &FieldSpec::Rational, PqPreset::Zero);
        assert_eq!(err.unwrap_err(), CatalogError::RootRequired);
    }
}
