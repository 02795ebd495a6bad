//! Line-oriented presentation files (`.hpf`).
//!
//! ```text
//! [field]
//! Qr                      # Qr | Q | F7 | F13
//!
//! [parameters]
//! p = 0                   # rational literals; must satisfy p^2 = q^2 + q^3
//! q = 0
//!
//! [generators]
//! # name order-weight trunc-weight tag
//! a 0 0 grouplike
//! F 2 2 skew(a,a^2)
//! s 2 2 skew(1,a) extra(-q,1,a)
//! t 4 3 none
//!
//! [relations]
//! b*a = a*b               # or a single expression meaning "= 0"
//!
//! [rules]                 # optional: explicit oriented rules lhs -> rhs
//! ts -> st
//!
//! [completion]            # optional: bounded completion after orienting
//! max-weight = 8
//!
//! [aliases]
//! x = s - q*a             # may reference earlier aliases
//! ```
//!
//! Generator order defines the monomial order; '#' starts a comment.

use std::collections::BTreeMap;
use std::path::Path;

use hopfcalc_core::coeff::{FieldElement, FieldSpec};
use hopfcalc_core::freealg::{NcPoly, Word};
use hopfcalc_core::hopf::{CoalgebraTag, HopfPresentation};
use hopfcalc_core::rewrite::{MonomialOrder, RewriteRule, RewriteSystem};
use thiserror::Error;

use crate::expr::{parse_expression, ExprError};

#[derive(Debug, Error)]
pub enum HpfError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Expr { line: usize, source: ExprError },
    #[error("unknown field kind `{0}` (expected Qr, Q, F7 or F13)")]
    UnknownField(String),
    #[error("parameter constraint p^2 = q^2 + q^3 violated")]
    ParameterConstraint,
    #[error("presentation error: {0}")]
    Build(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> HpfError {
    HpfError::Syntax { line, msg: msg.into() }
}

pub fn field_spec_from_name(name: &str) -> Result<FieldSpec, HpfError> {
    match name {
        "Qr" => Ok(FieldSpec::Cyclotomic3),
        "Q" => Ok(FieldSpec::Rational),
        "F7" => Ok(FieldSpec::f7()),
        "F13" => Ok(FieldSpec::f13()),
        other => Err(HpfError::UnknownField(other.to_string())),
    }
}

pub fn field_name(spec: &FieldSpec) -> &'static str {
    match spec {
        FieldSpec::Rational => "Q",
        FieldSpec::Cyclotomic3 => "Qr",
        _ if *spec == FieldSpec::f7() => "F7",
        _ => "F13",
    }
}

struct GeneratorDecl {
    name: String,
    order_weight: u64,
    trunc_weight: u64,
    // tag text deferred until scalars can be evaluated
    tag_tokens: Vec<String>,
    line: usize,
}

#[derive(Default)]
struct Sections {
    field: Option<(String, usize)>,
    parameters: Vec<(String, String, usize)>,
    generators: Vec<GeneratorDecl>,
    relations: Vec<(String, usize)>,
    rules: Vec<(String, usize)>,
    completion: Vec<(String, String, usize)>,
    aliases: Vec<(String, String, usize)>,
}

pub fn load_presentation(path: &Path) -> Result<HopfPresentation, HpfError> {
    let text = std::fs::read_to_string(path).map_err(|source| HpfError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_presentation(&text)
}

pub fn parse_presentation(text: &str) -> Result<HopfPresentation, HpfError> {
    let sections = split_sections(text)?;

    let (field_name, field_line) = sections
        .field
        .ok_or_else(|| syntax(0, "missing [field] section"))?;
    let spec = field_spec_from_name(field_name.trim())
        .map_err(|e| syntax(field_line, e.to_string()))?;

    let mut p = spec.zero();
    let mut q = spec.zero();
    for (key, value, line) in &sections.parameters {
        let v = parse_rational(&spec, value).ok_or_else(|| {
            syntax(*line, format!("parameter `{key}` must be a rational literal"))
        })?;
        match key.as_str() {
            "p" => p = v,
            "q" => q = v,
            other => return Err(syntax(*line, format!("unknown parameter `{other}`"))),
        }
    }
    let q2 = q.mul(&q);
    if p.mul(&p) != q2.add(&q2.mul(&q)) {
        return Err(HpfError::ParameterConstraint);
    }

    if sections.generators.is_empty() {
        return Err(syntax(0, "missing [generators] section"));
    }
    let names: Vec<String> = sections.generators.iter().map(|g| g.name.clone()).collect();
    let order_weights: Vec<u64> = sections.generators.iter().map(|g| g.order_weight).collect();
    let trunc_weights: Vec<u64> = sections.generators.iter().map(|g| g.trunc_weight).collect();
    let order = MonomialOrder::new(order_weights);

    // a relation-free copy gives us the expression parser over the alphabet
    let free = HopfPresentation::new(
        spec.clone(),
        names.clone(),
        RewriteSystem::from_rules(order.clone(), Vec::new())
            .map_err(|e| HpfError::Build(e.to_string()))?,
        trunc_weights.clone(),
        None,
        BTreeMap::new(),
        p.clone(),
        q.clone(),
    )
    .map_err(|e| HpfError::Build(e.to_string()))?;

    let mut relations = Vec::new();
    for (text, line) in &sections.relations {
        relations.push(parse_relation(&free, text, *line)?);
    }
    let mut system = RewriteSystem::from_relations(order.clone(), &relations)
        .map_err(|e| syntax(0, format!("cannot orient relations: {e}")))?;

    if !sections.rules.is_empty() {
        let mut rules = system.rules().to_vec();
        for (text, line) in &sections.rules {
            let Some((lhs, rhs)) = text.split_once("->") else {
                return Err(syntax(*line, "rule must be written `lhs -> rhs`"));
            };
            let lhs_word = parse_word(&free, lhs.trim(), *line)?;
            let rhs_poly = parse_expr_at(&free, rhs.trim(), *line)?;
            rules.push(RewriteRule { lhs: lhs_word, rhs: rhs_poly });
        }
        system = RewriteSystem::from_rules(order, rules)
            .map_err(|e| syntax(0, format!("invalid rule set: {e}")))?;
    }

    for (key, value, line) in &sections.completion {
        if key != "max-weight" {
            return Err(syntax(*line, format!("unknown completion key `{key}`")));
        }
        let max: u64 = value
            .parse()
            .map_err(|_| syntax(*line, "max-weight must be a natural number"))?;
        let (completed, _status) = system
            .complete(&trunc_weights, max)
            .map_err(|e| syntax(*line, format!("completion failed: {e}")))?;
        system = completed;
    }

    // tags: all `none` means no coalgebra structure at all
    let mut tags = Vec::new();
    let mut any_tag = false;
    for decl in &sections.generators {
        let tag = parse_tag(&free, decl)?;
        if tag.is_some() {
            any_tag = true;
        }
        tags.push(tag);
    }
    let tags = if any_tag {
        let all: Option<Vec<CoalgebraTag>> = tags.into_iter().collect();
        Some(all.ok_or_else(|| {
            syntax(0, "either every generator carries a tag or none does")
        })?)
    } else {
        None
    };

    let mut h = HopfPresentation::new(
        spec,
        names,
        system,
        trunc_weights,
        tags,
        BTreeMap::new(),
        p,
        q,
    )
    .map_err(|e| HpfError::Build(e.to_string()))?;

    for (name, value, line) in &sections.aliases {
        if h.generator_index(name).is_some() || h.alias(name).is_some() {
            return Err(syntax(*line, format!("`{name}` is already defined")));
        }
        let poly = parse_expr_at(&h, value, *line)?;
        h.insert_alias(name, &poly);
    }
    Ok(h)
}

fn split_sections(text: &str) -> Result<Sections, HpfError> {
    let mut out = Sections::default();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                return Err(syntax(line_no, "malformed section header"));
            };
            current = Some(name.trim().to_string());
            continue;
        }
        let section = current
            .as_deref()
            .ok_or_else(|| syntax(line_no, "content before the first section"))?;
        match section {
            "field" => {
                if out.field.is_some() {
                    return Err(syntax(line_no, "duplicate field value"));
                }
                out.field = Some((line.to_string(), line_no));
            }
            "parameters" | "completion" | "aliases" => {
                let Some((key, value)) = line.split_once('=') else {
                    return Err(syntax(line_no, "expected `key = value`"));
                };
                let entry = (key.trim().to_string(), value.trim().to_string(), line_no);
                match section {
                    "parameters" => out.parameters.push(entry),
                    "completion" => out.completion.push(entry),
                    _ => out.aliases.push(entry),
                }
            }
            "generators" => {
                let tokens: Vec<String> =
                    line.split_whitespace().map(String::from).collect();
                if tokens.len() < 3 {
                    return Err(syntax(
                        line_no,
                        "expected `name order-weight trunc-weight [tag]`",
                    ));
                }
                let order_weight = tokens[1]
                    .parse()
                    .map_err(|_| syntax(line_no, "order weight must be a natural number"))?;
                let trunc_weight = tokens[2]
                    .parse()
                    .map_err(|_| syntax(line_no, "trunc weight must be a natural number"))?;
                out.generators.push(GeneratorDecl {
                    name: tokens[0].clone(),
                    order_weight,
                    trunc_weight,
                    tag_tokens: tokens[3..].to_vec(),
                    line: line_no,
                });
            }
            "relations" => out.relations.push((line.to_string(), line_no)),
            "rules" => out.rules.push((line.to_string(), line_no)),
            other => return Err(syntax(line_no, format!("unknown section [{other}]"))),
        }
    }
    Ok(out)
}

fn parse_rational(spec: &FieldSpec, text: &str) -> Option<FieldElement> {
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, text),
    };
    let v = match body.split_once('/') {
        Some((n, d)) => spec.ratio(n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => spec.integer(body.parse().ok()?),
    };
    Some(if neg { v.negated() } else { v })
}

fn parse_expr_at(h: &HopfPresentation, text: &str, line: usize) -> Result<NcPoly, HpfError> {
    parse_expression(h, text).map_err(|source| HpfError::Expr { line, source })
}

fn parse_relation(h: &HopfPresentation, text: &str, line: usize) -> Result<NcPoly, HpfError> {
    match split_top_level_eq(text) {
        Some((lhs, rhs)) => {
            let l = parse_expr_at(h, lhs, line)?;
            let r = parse_expr_at(h, rhs, line)?;
            Ok(l.sub(&r))
        }
        None => parse_expr_at(h, text, line),
    }
}

fn split_top_level_eq(text: &str) -> Option<(&str, &str)> {
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    for (i, b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'=' if depth == 0 => return Some((&text[..i], &text[i + 1..])),
            _ => {}
        }
    }
    None
}

/// A word literal: `1`, or juxtaposed generator letters with `^` powers.
fn parse_word(h: &HopfPresentation, text: &str, line: usize) -> Result<Word, HpfError> {
    let poly = parse_word_poly(h, text, line)?;
    let mut terms = poly.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if *c == h.spec().one() => Ok(w.clone()),
        _ => Err(syntax(line, format!("`{text}` is not a plain word"))),
    }
}

fn parse_word_poly(h: &HopfPresentation, text: &str, line: usize) -> Result<NcPoly, HpfError> {
    // the expression grammar covers word literals; no reduction applies here
    // because words are matched against the free alphabet
    let spec = h.spec().clone();
    let mut out = NcPoly::one(&spec);
    let bytes = text.as_bytes();
    let mut i = 0;
    if text == "1" {
        return Ok(out);
    }
    while i < bytes.len() {
        let ch = &text[i..i + 1];
        let Some(g) = h.generator_index(ch) else {
            return Err(syntax(line, format!("unknown letter `{ch}` in word `{text}`")));
        };
        i += 1;
        let mut power = 1usize;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            let start = i;
            while bytes.get(i).is_some_and(|c| c.is_ascii_digit()) {
                i += 1;
            }
            power = text[start..i]
                .parse()
                .map_err(|_| syntax(line, "malformed power in word"))?;
        }
        out = out.multiply(&NcPoly::word(Word::generator(g).pow(power), &spec));
    }
    Ok(out)
}

fn parse_tag(
    free: &HopfPresentation,
    decl: &GeneratorDecl,
) -> Result<Option<CoalgebraTag>, HpfError> {
    let line = decl.line;
    let mut toks = decl.tag_tokens.iter();
    let Some(head) = toks.next() else {
        return Err(syntax(line, "missing coalgebra tag (use `none` to opt out)"));
    };
    match head.as_str() {
        "none" => Ok(None),
        "grouplike" => {
            if toks.next().is_some() {
                return Err(syntax(line, "grouplike takes no arguments"));
            }
            Ok(Some(CoalgebraTag::GroupLike))
        }
        skew if skew.starts_with("skew(") => {
            let args = arguments(skew, "skew", line)?;
            if args.len() != 2 {
                return Err(syntax(line, "skew takes two group-like words"));
            }
            let g_left = parse_word(free, args[0], line)?;
            let g_right = parse_word(free, args[1], line)?;
            let mut extra = Vec::new();
            for tok in toks {
                let args = arguments(tok, "extra", line)?;
                if args.len() != 3 {
                    return Err(syntax(line, "extra takes (coeff, left, right)"));
                }
                let coeff_poly = parse_expr_at(free, args[0], line)?;
                let coeff = coeff_poly
                    .as_constant(free.spec())
                    .ok_or_else(|| syntax(line, "extra coefficient must be a scalar"))?;
                let left = parse_word(free, args[1], line)?;
                let right = parse_word(free, args[2], line)?;
                if !coeff.is_zero() {
                    extra.push((coeff, left, right));
                }
            }
            Ok(Some(CoalgebraTag::SkewPrimitive { g_left, g_right, extra }))
        }
        other => Err(syntax(line, format!("unknown tag `{other}`"))),
    }
}

fn arguments<'t>(token: &'t str, name: &str, line: usize) -> Result<Vec<&'t str>, HpfError> {
    let body = token
        .strip_prefix(name)
        .and_then(|t| t.strip_prefix('('))
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("malformed `{name}(...)`")))?;
    Ok(body.split(',').map(str::trim).collect())
}

/// Rule-for-rule structural equality, including names, weights, tags,
/// aliases and parameters.
pub fn presentations_equal(a: &HopfPresentation, b: &HopfPresentation) -> bool {
    if a.gen_names() != b.gen_names()
        || a.spec() != b.spec()
        || a.trunc_weights() != b.trunc_weights()
        || a.system().order().weights() != b.system().order().weights()
        || a.p() != b.p()
        || a.q() != b.q()
        || a.tags() != b.tags()
    {
        return false;
    }
    let rules = |h: &HopfPresentation| -> Vec<(Word, NcPoly)> {
        let mut v: Vec<_> = h
            .system()
            .rules()
            .iter()
            .map(|r| (r.lhs.clone(), r.rhs.clone()))
            .collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        v
    };
    if rules(a) != rules(b) {
        return false;
    }
    let aliases = |h: &HopfPresentation| -> Vec<(String, NcPoly)> {
        h.alias_names()
            .map(|n| (n.clone(), h.alias(n).unwrap().clone()))
            .collect()
    };
    aliases(a) == aliases(b)
}
