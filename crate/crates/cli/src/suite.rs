//! Registered verification checks and the suite runner.

use std::path::Path;
use std::time::Instant;

use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::freealg::{NcPoly, TensorPoly, Word};
use hopfcalc_core::hopf::catalog::{
    self, AlgebraName, PqPreset, GA, GB, GF, GS, GT,
};
use hopfcalc_core::hopf::{HopfPresentation, MinPolyResult};
use hopfcalc_core::nichols::{
    space_v1, space_va_closed_form, space_va_derived, space_vb, BraidedTensor,
};
use hopfcalc_core::primitives::solve_skew_primitives;

use crate::expr::parse_expression;
use crate::hpf::{field_name, load_presentation, HpfError};
use crate::report::{glob_match, CheckResult, Report, Status};

pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

use Outcome::{Fail, Pass, Skipped};

pub struct Check {
    pub id: &'static str,
    pub algebra: &'static str,
    pub field: &'static str,
    run: Box<dyn Fn() -> Outcome>,
}

pub fn field_names_with_root() -> [&'static str; 3] {
    ["Qr", "F7", "F13"]
}

fn spec_of(field: &'static str) -> FieldSpec {
    match field {
        "Qr" => FieldSpec::Cyclotomic3,
        "Q" => FieldSpec::Rational,
        "F7" => FieldSpec::f7(),
        _ => FieldSpec::f13(),
    }
}

fn build(name: AlgebraName, field: &'static str, preset: PqPreset) -> HopfPresentation {
    catalog::build(name, &spec_of(field), preset).expect("catalog build")
}

fn mono(spec: &FieldSpec, letters: &[usize]) -> NcPoly {
    NcPoly::term(Word::from_letters(letters), spec.one())
}

fn expect(cond: bool, msg: &str, errors: &mut Vec<String>) {
    if !cond {
        errors.push(msg.to_string());
    }
}

fn outcome(errors: Vec<String>, detail: String) -> Outcome {
    if errors.is_empty() {
        Pass(detail)
    } else {
        Fail(errors.join("; "))
    }
}

/// Verify `lhs = rhs` where both sides are expression strings.
fn identity(h: &HopfPresentation, lhs: &str, rhs: &str, errors: &mut Vec<String>) {
    match (parse_expression(h, lhs), parse_expression(h, rhs)) {
        (Ok(l), Ok(r)) => expect(l == r, &format!("{lhs} != {rhs}"), errors),
        (l, r) => errors.push(format!(
            "parse failure in `{lhs}` = `{rhs}`: {:?} {:?}",
            l.err(),
            r.err()
        )),
    }
}

fn check_confluence(name: AlgebraName, field: &'static str, preset: PqPreset) -> Outcome {
    let h = build(name, field, preset);
    let rep = h.system().check_confluence();
    if rep.is_confluent() {
        Pass(format!(
            "{} rules, {} ambiguities, all resolved",
            h.system().rules().len(),
            rep.ambiguities
        ))
    } else {
        Fail(format!("{} unresolved ambiguities", rep.failures.len()))
    }
}

fn check_commutation(field: &'static str) -> Outcome {
    let spec = spec_of(field);
    let r = spec.root().expect("root field");
    let mut errors = Vec::new();
    for preset in [PqPreset::Zero, PqPreset::SixThree] {
        let h = build(AlgebraName::Atilde, field, preset);
        let a = mono(&spec, &[GA]);
        let b = mono(&spec, &[GB]);
        let f = mono(&spec, &[GF]);
        let t = mono(&spec, &[GT]);
        let tag = format!("pq={preset:?}");
        expect(
            h.verify_identity(&a.multiply(&f), &f.multiply(&a).scaled(&r.mul(&r))),
            &format!("aF = r^2 Fa [{tag}]"),
            &mut errors,
        );
        expect(
            h.verify_identity(&b.multiply(&f), &f.multiply(&b)),
            &format!("bF = Fb [{tag}]"),
            &mut errors,
        );
        expect(
            h.verify_identity(&t.multiply(&f), &f.multiply(&t)),
            &format!("tF = Ft [{tag}]"),
            &mut errors,
        );
        identity(
            &h,
            "s*F",
            "r*F*s + ((r+2)/3)*(1+3*q)*a*F + ((r-1)/3)*F + (a-1)/3",
            &mut errors,
        );
        identity(&h, "F", "x*a + (r+1)*a*x + ((r+2)/3)*(a - a^2)", &mut errors);
        // Delta(F) = a (x) F + F (x) a^2
        let mut want = TensorPoly::term(
            vec![Word::generator(GA), Word::generator(GF)],
            spec.one(),
        );
        want.add_term(
            vec![Word::generator(GF), Word::from_letters(&[GA, GA])],
            spec.one(),
        );
        match h.coproduct(&f) {
            Ok(d) => expect(d == want, &format!("Delta(F) [{tag}]"), &mut errors),
            Err(e) => errors.push(format!("coproduct: {e}")),
        }
    }
    outcome(errors, "5 identities + Delta(F) at both (p,q) presets".to_string())
}

fn check_cube_central(field: &'static str) -> Outcome {
    let spec = spec_of(field);
    let h = build(AlgebraName::Atilde, field, PqPreset::Zero);
    let f3 = mono(&spec, &[GF, GF, GF]);
    let mut errors = Vec::new();
    expect(h.is_central(&f3), "F^3 central", &mut errors);
    match h.is_skew_primitive(&f3, &Word::empty(), &Word::empty()) {
        Ok(ok) => expect(ok, "F^3 (1,1)-primitive", &mut errors),
        Err(e) => errors.push(format!("primitivity: {e}")),
    }
    outcome(errors, "F^3 central and (1,1)-primitive".to_string())
}

fn check_cubic_relations(field: &'static str) -> Outcome {
    let h = build(AlgebraName::A, field, PqPreset::Zero);
    let mut errors = Vec::new();
    for rel in [
        "x + a*x*a^2 + a^2*x*a - a + 1",
        "x^2 + a*x^2*a^2 + x*a*x*a^2 + x + a*x*a^2",
    ] {
        match parse_expression(&h, rel) {
            Ok(p) => expect(p.is_zero(), &format!("{rel} = 0"), &mut errors),
            Err(e) => errors.push(format!("parse `{rel}`: {e}")),
        }
    }
    outcome(errors, "both defining relations reduce to 0".to_string())
}

fn check_coideal(field: &'static str) -> Outcome {
    let spec = spec_of(field);
    let h = build(AlgebraName::A, field, PqPreset::Zero);
    let gens = vec![mono(&spec, &[GS]), mono(&spec, &[GT])];
    match h.coideal_subalgebra_check(&gens, 8) {
        Ok(rep) if rep.pass() => Pass(format!(
            "subalgebra dim {} up to weight 8, {} coproducts checked",
            rep.subalgebra_dim, rep.checks
        )),
        Ok(rep) => Fail(rep.failures.join("; ")),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_coradical(field: &'static str) -> Outcome {
    let h = build(AlgebraName::A, field, PqPreset::Zero);
    match h.hopf_subalgebra_check(&[GA, GB, GF], 8) {
        Ok(rep) if rep.closed() && rep.dimension == Some(18) => {
            Pass("closed under m, Delta, S; dimension 18".to_string())
        }
        Ok(rep) => Fail(format!(
            "dimension {:?}, {} mult / {} delta / {} antipode failures",
            rep.dimension,
            rep.mult_failures.len(),
            rep.delta_failures.len(),
            rep.antipode_failures.len()
        )),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_factorization(field: &'static str) -> Outcome {
    let h = build(AlgebraName::A, field, PqPreset::Zero);
    let weights = h.trunc_weights();
    let max = 10u64;
    let full = h.system().enumerate_basis(weights, max);
    let mut allowed_c = vec![false; 5];
    let mut allowed_b = vec![false; 5];
    for g in [GA, GB, GF] {
        allowed_c[g] = true;
    }
    for g in [GS, GT] {
        allowed_b[g] = true;
    }
    let c_part = h.system().enumerate_basis_restricted(weights, max, &allowed_c);
    let b_part = h.system().enumerate_basis_restricted(weights, max, &allowed_b);
    let census = |words: &[Word]| {
        let mut counts = vec![0usize; max as usize + 1];
        for w in words {
            counts[h.word_weight(w) as usize] += 1;
        }
        counts
    };
    let (fc, cc, bc) = (census(&full.words), census(&c_part.words), census(&b_part.words));
    let mut errors = Vec::new();
    for w in 0..=max as usize {
        let conv: usize = (0..=w).map(|i| cc[i] * bc[w - i]).sum();
        expect(fc[w] == conv, &format!("weight {w}: {} != {conv}", fc[w]), &mut errors);
    }
    outcome(
        errors,
        format!("basis counts factor as a convolution for all weights <= {max}"),
    )
}

fn check_qsl2(field: &'static str) -> Outcome {
    let h = build(AlgebraName::Atilde, field, PqPreset::Zero);
    let mut errors = Vec::new();
    identity(&h, "K*E", "r^2*E*K", &mut errors);
    identity(&h, "E*F - F*E", "(K - K^2)/(r - r^2)", &mut errors);
    identity(
        &h,
        "x",
        "((1-r^2)/3)*F*K + ((1-r)/3)*E*K + (K^2 - 1)/3",
        &mut errors,
    );
    identity(&h, "Omega", "(x*a)^2 - a^2*x - a^2*x^2 + 1/3", &mut errors);
    match parse_expression(&h, "Omega") {
        Ok(om) => expect(h.is_central(&om), "Omega central", &mut errors),
        Err(e) => errors.push(format!("{e}")),
    }
    outcome(errors, "K, E, F, Omega identities hold".to_string())
}

fn check_nilpotent_e(field: &'static str) -> Outcome {
    let d = build(AlgebraName::D, field, PqPreset::Zero);
    match parse_expression(&d, "E^3") {
        Ok(p) if p.is_zero() => Pass("E^3 = 0".to_string()),
        Ok(p) => Fail(format!("E^3 reduces to {}", d.render_poly(&p))),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_casimir(field: &'static str) -> Outcome {
    let spec = spec_of(field);
    let h = build(AlgebraName::A, field, PqPreset::Zero);
    let omega = h.alias("Omega").expect("Omega alias").clone();
    let mut errors = Vec::new();
    let want = vec![spec.ratio(2, 27), spec.ratio(-1, 3), spec.zero(), spec.one()];
    match h.min_poly(&omega, 4) {
        Ok(MinPolyResult::Poly(c)) => expect(
            c == want,
            "min poly is t^3 - t/3 + 2/27",
            &mut errors,
        ),
        other => errors.push(format!("expected a cubic minimal polynomial, got {other:?}")),
    }
    match parse_expression(&h, "z^2") {
        Ok(p) => expect(p.is_zero(), "z^2 = 0", &mut errors),
        Err(e) => errors.push(format!("{e}")),
    }
    outcome(errors, "min poly cubic, nilpotent z of order 2".to_string())
}

fn check_dim108(field: &'static str) -> Outcome {
    let d = build(AlgebraName::D, field, PqPreset::Zero);
    let basis = d.basis_words(24);
    if basis.exact && basis.total() == Some(108) {
        Pass("basis closes out at 108 = 27 * 4 words".to_string())
    } else {
        Fail(format!("exact={}, total={:?}", basis.exact, basis.total()))
    }
}

fn check_central_c(field: &'static str) -> Outcome {
    let h = build(AlgebraName::Atilde, field, PqPreset::Zero);
    let mut errors = Vec::new();
    let c = h.alias("c").expect("c alias").clone();
    expect(h.is_central(&c), "c central", &mut errors);
    match h.is_skew_primitive(&c, &Word::empty(), &Word::empty()) {
        Ok(ok) => expect(ok, "c (1,1)-primitive", &mut errors),
        Err(e) => errors.push(format!("{e}")),
    }
    identity(&h, "c", "F^3 + (3*r+6)*(x^2+x^3)", &mut errors);
    // the sign-flipped coefficient must not reproduce c
    match (
        parse_expression(&h, "c"),
        parse_expression(&h, "F^3 + (3*r-6)*(x^2+x^3)"),
    ) {
        (Ok(l), Ok(r)) => expect(l != r, "3r-6 variant rejected", &mut errors),
        _ => errors.push("parse failure in coefficient cross-check".to_string()),
    }
    outcome(
        errors,
        "c central, primitive, equals F^3 + (3r+6)(x^2+x^3)".to_string(),
    )
}

fn check_rootfree(field: &'static str) -> Outcome {
    let main = build(AlgebraName::Atilde, "Qr", PqPreset::Zero);
    let rfree = build(AlgebraName::AtildeRfree, field, PqPreset::Zero);
    let census = |h: &HopfPresentation| {
        let words = h.basis_words(8).words;
        let mut counts = vec![0usize; 9];
        for w in &words {
            counts[h.word_weight(w) as usize] += 1;
        }
        counts
    };
    let (m, r) = (census(&main), census(&rfree));
    if m == r {
        Pass(format!(
            "{} completed rules; per-weight counts {:?} match the root-bearing presentation",
            rfree.system().rules().len(),
            r
        ))
    } else {
        Fail(format!("{m:?} != {r:?}"))
    }
}

fn check_cleft(
    name: AlgebraName,
    field: &'static str,
    which: &'static str,
) -> Outcome {
    use hopfcalc_core::cleft::QuotientCoalgebra;
    let q = match QuotientCoalgebra::for_algebra(name, &spec_of(field)) {
        Ok(q) => q,
        Err(e) => return Fail(format!("{e}")),
    };
    let rep = match which {
        "section" => q.check_section(),
        "colinearity" => q.check_colinearity(),
        _ => q.check_coradical_inverse(),
    };
    match rep {
        Ok(rep) if rep.pass() => Pass(format!("{which} holds on all classes")),
        Ok(rep) => Fail(rep.failures.join("; ")),
        Err(e) => Fail(format!("{e}")),
    }
}

fn grouplike_words() -> Vec<Word> {
    vec![
        Word::empty(),
        Word::from_letters(&[GA]),
        Word::from_letters(&[GB]),
        Word::from_letters(&[GA, GA]),
        Word::from_letters(&[GA, GB]),
        Word::from_letters(&[GA, GA, GB]),
    ]
}

fn primitive_dims(h: &HopfPresentation, max_weight: u64) -> Result<Vec<usize>, String> {
    grouplike_words()
        .iter()
        .map(|g| {
            solve_skew_primitives(h, g, max_weight)
                .map(|s| s.dim())
                .map_err(|e| format!("{e:?}"))
        })
        .collect()
}

fn check_primitive_census(field: &'static str) -> Outcome {
    let h = build(AlgebraName::Atilde, field, PqPreset::Zero);
    let want = vec![2, 2, 1, 0, 0, 0];
    let weights: &[u64] = if field == "Qr" { &[10, 12] } else { &[8] };
    let mut errors = Vec::new();
    for &w in weights {
        match primitive_dims(&h, w) {
            Ok(dims) => expect(
                dims == want,
                &format!("weight {w}: dims {dims:?}"),
                &mut errors,
            ),
            Err(e) => errors.push(e),
        }
    }
    if field == "Qr" {
        // the known spanning elements lie in their components
        let spec = spec_of(field);
        let x = h.alias("x").unwrap().clone();
        let x2 = x.multiply(&x);
        let v1 = solve_skew_primitives(&h, &Word::empty(), 10).unwrap();
        expect(
            v1.contains(&h, &x2.add(&x2.multiply(&x))),
            "x^2+x^3 in V_1",
            &mut errors,
        );
        expect(
            v1.contains(&h, &mono(&spec, &[GF, GF, GF])),
            "F^3 in V_1",
            &mut errors,
        );
        let va = solve_skew_primitives(&h, &Word::generator(GA), 10).unwrap();
        expect(va.contains(&h, &x), "x in V_a", &mut errors);
        let vb = solve_skew_primitives(&h, &Word::generator(GB), 10).unwrap();
        expect(
            vb.contains(&h, &h.alias("y").unwrap().clone()),
            "y in V_b",
            &mut errors,
        );
    }
    outcome(
        errors,
        format!("dims (2,2,1,0,0,0) stable at weights {weights:?}"),
    )
}

fn check_primitive_census_quotient(
    name: AlgebraName,
    field: &'static str,
    max_weight: u64,
) -> Outcome {
    let h = build(name, field, PqPreset::Zero);
    match primitive_dims(&h, max_weight) {
        Ok(dims) if dims == vec![1, 2, 1, 0, 0, 0] => Pass(format!(
            "dims (1,2,1,0,0,0) at weight {max_weight}: the cube relation folds into V_1"
        )),
        Ok(dims) => Fail(format!("dims {dims:?}")),
        Err(e) => Fail(e),
    }
}

fn check_braiding_matrix() -> Outcome {
    let h = build(AlgebraName::Atilde, "Qr", PqPreset::Zero);
    let derived = match space_va_derived(&h) {
        Ok(v) => v,
        Err(e) => return Fail(format!("{e}")),
    };
    let closed = space_va_closed_form(h.spec());
    let mut errors = Vec::new();
    expect(
        derived.braiding() == closed.braiding(),
        "derived braiding equals the closed form",
        &mut errors,
    );
    expect(derived.check_braid_equation(), "braid equation", &mut errors);
    outcome(errors, "4x4 braiding matches entry for entry".to_string())
}

fn check_nichols_adjudication(field: &'static str) -> Outcome {
    let h = build(AlgebraName::Atilde, field, PqPreset::Zero);
    let v = match space_va_derived(&h) {
        Ok(v) => v,
        Err(e) => return Fail(format!("{e}")),
    };
    let rep = match v.nichols_dims(6) {
        Ok(r) => r,
        Err(e) => return Fail(format!("{e}")),
    };
    if rep.char_caveat {
        return Skipped(format!(
            "positive characteristic: symmetrizer degenerates, ranks {:?} not comparable",
            rep.ranks
        ));
    }
    let mut errors = Vec::new();
    expect(rep.terminated, "rank sequence terminates", &mut errors);
    expect(
        rep.ranks == vec![1, 2, 3, 2, 1, 0, 0],
        &format!("ranks {:?}", rep.ranks),
        &mut errors,
    );
    // both candidate totals are checked against the exact rank sum
    let verdict = format!(
        "total {}: 'dimension 9' {}, '10-element homogeneous basis' {}",
        rep.total,
        if rep.total == 9 { "holds" } else { "fails" },
        if rep.total == 10 { "holds" } else { "is impossible" },
    );
    outcome(errors, verdict)
}

fn check_relations_in_kernel() -> Outcome {
    let h = build(AlgebraName::Atilde, "Qr", PqPreset::Zero);
    let spec = h.spec().clone();
    let v = match space_va_derived(&h) {
        Ok(v) => v,
        Err(e) => return Fail(format!("{e}")),
    };
    let one = spec.one();
    let (u, w) = (0usize, 1usize);
    let relations = vec![
        BraidedTensor::from_monomials(2, 3, &[(one.clone(), vec![u, u, u])], &spec),
        BraidedTensor::from_monomials(2, 3, &[(one.clone(), vec![w, w, w])], &spec),
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
    match v.check_relations_in_kernel(&relations) {
        Ok(flags) if flags == vec![true; 4] => {
            Pass("all four displayed relations lie in symmetrizer kernels".to_string())
        }
        Ok(flags) => Fail(format!("kernel membership {flags:?}")),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_exterior_line() -> Outcome {
    let h = build(AlgebraName::Atilde, "Qr", PqPreset::Zero);
    let v = match space_vb(&h) {
        Ok(v) => v,
        Err(e) => return Fail(format!("{e}")),
    };
    match v.nichols_dims(4) {
        Ok(rep) if rep.total == 2 && rep.ranks == vec![1, 1, 0, 0, 0] => {
            Pass("total dimension 2: an exterior line".to_string())
        }
        Ok(rep) => Fail(format!("ranks {:?}, total {}", rep.ranks, rep.total)),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_symmetric_plane() -> Outcome {
    let h = build(AlgebraName::Atilde, "Qr", PqPreset::Zero);
    let v = match space_v1(&h) {
        Ok(v) => v,
        Err(e) => return Fail(format!("{e}")),
    };
    match v.nichols_dims(4) {
        Ok(rep) if rep.ranks == vec![1, 2, 3, 4, 5] => {
            Pass("ranks (1,2,3,4,5): a polynomial plane".to_string())
        }
        Ok(rep) => Fail(format!("ranks {:?}", rep.ranks)),
        Err(e) => Fail(format!("{e}")),
    }
}

fn check_negative(which: &'static str) -> Outcome {
    let spec = FieldSpec::Cyclotomic3;
    match which {
        "confluence" => {
            let sys = match catalog::corrupted_confluence(&spec) {
                Ok(s) => s,
                Err(e) => return Fail(format!("{e}")),
            };
            let rep = sys.check_confluence();
            if rep.is_confluent() {
                Fail("corrupted system was reported confluent".to_string())
            } else {
                Pass(format!(
                    "{} unresolved ambiguities detected as required",
                    rep.failures.len()
                ))
            }
        }
        "coproduct" => {
            let h = match catalog::corrupted_commutation(&spec) {
                Ok(h) => h,
                Err(e) => return Fail(format!("{e}")),
            };
            match h.check_bialgebra() {
                Ok(rep) if !rep.pass() => {
                    Pass("Delta-compatibility failure detected as required".to_string())
                }
                Ok(_) => Fail("corrupted presentation passed the bialgebra check".to_string()),
                Err(_) => Pass("bialgebra check rejected the presentation".to_string()),
            }
        }
        _ => {
            let h = match catalog::corrupted_antipode(&spec) {
                Ok(h) => h,
                Err(e) => return Fail(format!("{e}")),
            };
            match h.check_antipode() {
                Ok(rep) if !rep.pass() => {
                    Pass("antipode axiom failure detected as required".to_string())
                }
                Ok(_) => Fail("corrupted antipode passed".to_string()),
                Err(_) => Pass("antipode check rejected the presentation".to_string()),
            }
        }
    }
}

macro_rules! check {
    ($list:expr, $id:expr, $alg:expr, $field:expr, $body:expr) => {
        $list.push(Check {
            id: $id,
            algebra: $alg,
            field: $field,
            run: Box::new($body),
        })
    };
}

pub fn registry() -> Vec<Check> {
    let mut cs: Vec<Check> = Vec::new();
    for field in field_names_with_root() {
        for name in [
            AlgebraName::Atilde,
            AlgebraName::A,
            AlgebraName::Agen,
            AlgebraName::D,
        ] {
            check!(cs, "confluence.rules_close", name.as_str(), field, move || {
                check_confluence(name, field, PqPreset::Zero)
            });
        }
        check!(cs, "fgen.commutation", "Atilde", field, move || {
            check_commutation(field)
        });
        check!(cs, "fgen.cube_central_primitive", "Atilde", field, move || {
            check_cube_central(field)
        });
        check!(cs, "presentation.cubic_relations", "A", field, move || {
            check_cubic_relations(field)
        });
        check!(cs, "presentation.coideal", "A", field, move || {
            check_coideal(field)
        });
        check!(cs, "presentation.coradical_dim18", "A", field, move || {
            check_coradical(field)
        });
        check!(cs, "presentation.factorization", "A", field, move || {
            check_factorization(field)
        });
        check!(cs, "qsl2.identities", "Atilde", field, move || {
            check_qsl2(field)
        });
        check!(cs, "qsl2.nilpotent_e", "D", field, move || {
            check_nilpotent_e(field)
        });
        check!(cs, "casimir.min_poly", "A", field, move || {
            check_casimir(field)
        });
        check!(cs, "smallquantum.dim108", "D", field, move || {
            check_dim108(field)
        });
        check!(cs, "central_c.identity", "Atilde", field, move || {
            check_central_c(field)
        });
        for name in [AlgebraName::A, AlgebraName::Agen] {
            for which in ["section", "colinearity", "coradical_inverse"] {
                let id: &'static str = match which {
                    "section" => "cleft.section",
                    "colinearity" => "cleft.colinearity",
                    _ => "cleft.coradical_inverse",
                };
                check!(cs, id, name.as_str(), field, move || {
                    check_cleft(name, field, which)
                });
            }
        }
        check!(cs, "primitives.census", "Atilde", field, move || {
            check_primitive_census(field)
        });
    }
    check!(cs, "primitives.census_quotient", "A", "Qr", || {
        check_primitive_census_quotient(AlgebraName::A, "Qr", 10)
    });
    for field in ["F7", "F13"] {
        check!(cs, "primitives.census_quotient", "Agen", field, move || {
            check_primitive_census_quotient(AlgebraName::Agen, field, 8)
        });
    }
    check!(cs, "confluence.rules_close", "B", "Q", || {
        check_confluence(AlgebraName::B, "Q", PqPreset::Zero)
    });
    check!(cs, "rootfree.census", "Atilde-rfree", "Q", || {
        check_rootfree("Q")
    });
    check!(cs, "nichols.braiding_matrix", "Atilde", "Qr", check_braiding_matrix);
    for field in ["Qr", "F7"] {
        check!(cs, "nichols.adjudication", "Atilde", field, move || {
            check_nichols_adjudication(field)
        });
    }
    check!(cs, "nichols.relations_in_kernel", "Atilde", "Qr", check_relations_in_kernel);
    check!(cs, "nichols.exterior_line", "Atilde", "Qr", check_exterior_line);
    check!(cs, "nichols.symmetric_plane", "Atilde", "Qr", check_symmetric_plane);
    for which in ["confluence", "coproduct", "antipode"] {
        let id: &'static str = match which {
            "confluence" => "negative.confluence",
            "coproduct" => "negative.coproduct",
            _ => "negative.antipode",
        };
        check!(cs, id, "Atilde", "Qr", move || check_negative(which));
    }
    cs
}

pub fn run_suite(
    filter: &str,
    algebra: Option<&str>,
    field: Option<&str>,
) -> Report {
    let mut results = Vec::new();
    for check in registry() {
        if !glob_match(filter, check.id) {
            continue;
        }
        if algebra.is_some_and(|a| a != check.algebra) {
            continue;
        }
        if field.is_some_and(|f| f != check.field) {
            continue;
        }
        let start = Instant::now();
        let outcome = (check.run)();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (status, details) = match outcome {
            Pass(d) => (Status::Pass, d),
            Fail(d) => (Status::Fail, d),
            Skipped(d) => (Status::Skipped, d),
        };
        results.push(CheckResult {
            check_id: check.id.to_string(),
            algebra: check.algebra.to_string(),
            field: check.field.to_string(),
            status,
            details,
            elapsed_ms,
        });
    }
    Report::new(results)
}

/// Structural checks for an arbitrary loaded presentation file.
pub fn run_file_checks(path: &Path) -> Result<Report, HpfError> {
    let h = load_presentation(path)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".to_string());
    let field = field_name(h.spec()).to_string();
    let mut results = Vec::new();
    let mut push = |id: &str, status: Status, details: String, elapsed_ms: u64| {
        results.push(CheckResult {
            check_id: id.to_string(),
            algebra: label.clone(),
            field: field.clone(),
            status,
            details,
            elapsed_ms,
        });
    };
    let start = Instant::now();
    let rep = h.system().check_confluence();
    let ms = start.elapsed().as_millis() as u64;
    if rep.is_confluent() {
        push(
            "file.confluence",
            Status::Pass,
            format!("{} ambiguities resolved", rep.ambiguities),
            ms,
        );
    } else {
        push(
            "file.confluence",
            Status::Fail,
            format!("{} unresolved ambiguities", rep.failures.len()),
            ms,
        );
    }
    if h.has_coalgebra() {
        let start = Instant::now();
        let outcome = h.check_bialgebra();
        let ms = start.elapsed().as_millis() as u64;
        match outcome {
            Ok(rep) if rep.pass() => {
                push("file.bialgebra", Status::Pass, "axioms hold".to_string(), ms)
            }
            Ok(rep) => push("file.bialgebra", Status::Fail, rep.failures.join("; "), ms),
            Err(e) => push("file.bialgebra", Status::Fail, format!("{e}"), ms),
        }
        let start = Instant::now();
        let outcome = h.check_antipode();
        let ms = start.elapsed().as_millis() as u64;
        match outcome {
            Ok(rep) if rep.pass() => {
                push("file.antipode", Status::Pass, "axiom holds".to_string(), ms)
            }
            Ok(rep) => push("file.antipode", Status::Fail, rep.failures.join("; "), ms),
            Err(e) => push("file.antipode", Status::Fail, format!("{e}"), ms),
        }
    } else {
        push(
            "file.bialgebra",
            Status::Skipped,
            "no coalgebra tags declared".to_string(),
            0,
        );
    }
    Ok(Report::new(results))
}
