//! Expression parser for elements of the active presentation.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' factor) | factor | ('/' factor))*
//! factor := atom ('^' nat)?
//! atom   := ident | rational | '(' expr ')'
//! ```
//!
//! An alphabetic run resolves as a whole name (generator, alias, or the
//! scalars r, p, q) when one exists; otherwise it splits into single-letter
//! names, so `axa^2` is a·x·a². Division requires a constant divisor.

use hopfcalc_core::coeff::FieldElement;
use hopfcalc_core::freealg::NcPoly;
use hopfcalc_core::hopf::HopfPresentation;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprErrorKind {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("malformed literal")]
    MalformedLiteral,
    #[error("unbalanced parentheses")]
    UnbalancedParens,
    #[error("unexpected input")]
    UnexpectedToken,
    #[error("expression ends unexpectedly")]
    UnexpectedEnd,
    #[error("divisor must be a nonzero constant")]
    BadDivisor,
    #[error("this field has no cube root of unity")]
    NoRoot,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub offset: usize,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    h: &'a HopfPresentation,
}

/// Parse `text` into a normal-form element of `h`.
pub fn parse_expression(h: &HopfPresentation, text: &str) -> Result<NcPoly, ExprError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, h };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err(ExprErrorKind::UnexpectedToken));
    }
    Ok(h.normal_form(&e))
}

/// Render an element so that [`parse_expression`] reads it back verbatim.
pub fn print_expression(h: &HopfPresentation, f: &NcPoly) -> String {
    h.render_poly(f)
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ExprErrorKind) -> ExprError {
        ExprError { kind, offset: self.pos }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<NcPoly, ExprError> {
        let negate = self.peek() == Some(b'-');
        if negate {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.negated();
        }
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcPoly, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.multiply(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let divisor = self.factor()?;
                    let spec = self.h.spec();
                    let c = divisor
                        .as_constant(spec)
                        .filter(|c| !c.is_zero())
                        .ok_or(ExprError { kind: ExprErrorKind::BadDivisor, offset: at })?;
                    let inv = c
                        .inverse()
                        .map_err(|_| ExprError { kind: ExprErrorKind::BadDivisor, offset: at })?;
                    acc = acc.scaled(&inv);
                }
                // juxtaposition: anything that can start an atom
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.multiply(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPoly, ExprError> {
        let (prefix, last) = self.atom()?;
        let base = if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.nat()?;
            let spec = self.h.spec().clone();
            prefix.multiply(&last.pow(n as usize, &spec))
        } else {
            prefix.multiply(&last)
        };
        Ok(base)
    }

    /// Returns (prefix, last): an exponent applies only to `last`, so within
    /// a split letter run `axa^2` the square lands on the final letter.
    fn atom(&mut self) -> Result<(NcPoly, NcPoly), ExprError> {
        let spec = self.h.spec().clone();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(ExprErrorKind::UnbalancedParens));
                }
                self.pos += 1;
                Ok((NcPoly::one(&spec), inner))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                let value = if self.src.get(self.pos) == Some(&b'/')
                    && self
                        .src
                        .get(self.pos + 1)
                        .is_some_and(|d| d.is_ascii_digit())
                {
                    self.pos += 1;
                    let d = self.nat()?;
                    if d == 0 {
                        return Err(self.err(ExprErrorKind::MalformedLiteral));
                    }
                    spec.ratio(n, d)
                } else {
                    spec.integer(n)
                };
                Ok((NcPoly::one(&spec), NcPoly::term(
                    hopfcalc_core::freealg::Word::empty(),
                    value,
                )))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                // trailing digits belong to the run only if the whole run is
                // a known name; trim back to letters otherwise
                let full = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(e) = self.resolve(full) {
                    return Ok((NcPoly::one(&spec), e?));
                }
                let mut end = start;
                while end < self.pos && self.src[end].is_ascii_alphabetic() {
                    end += 1;
                }
                self.pos = end;
                let run = core::str::from_utf8(&self.src[start..end]).unwrap();
                if let Some(e) = self.resolve(run) {
                    return Ok((NcPoly::one(&spec), e?));
                }
                // split into single letters
                let mut prefix = NcPoly::one(&spec);
                let chars: Vec<String> =
                    run.chars().map(|c| c.to_string()).collect();
                let mut elems = Vec::with_capacity(chars.len());
                for (i, name) in chars.iter().enumerate() {
                    match self.resolve(name) {
                        Some(e) => elems.push(e?),
                        None => {
                            return Err(ExprError {
                                kind: ExprErrorKind::UnknownIdentifier(name.clone()),
                                offset: start + i,
                            })
                        }
                    }
                }
                let lastv = elems.pop().expect("nonempty run");
                for e in elems {
                    prefix = prefix.multiply(&e);
                }
                Ok((prefix, lastv))
            }
            Some(_) => Err(self.err(ExprErrorKind::UnexpectedToken)),
            None => Err(self.err(ExprErrorKind::UnexpectedEnd)),
        }
    }

    fn resolve(&self, name: &str) -> Option<Result<NcPoly, ExprError>> {
        let spec = self.h.spec();
        if let Some(i) = self.h.generator_index(name) {
            return Some(Ok(self.h.generator_poly(i)));
        }
        if let Some(p) = self.h.alias(name) {
            return Some(Ok(p.clone()));
        }
        let scalar = |c: FieldElement| {
            Some(Ok(NcPoly::term(hopfcalc_core::freealg::Word::empty(), c)))
        };
        match name {
            "r" => match spec.root() {
                Ok(c) => scalar(c),
                Err(_) => Some(Err(ExprError {
                    kind: ExprErrorKind::NoRoot,
                    offset: self.pos,
                })),
            },
            "p" => scalar(self.h.p().clone()),
            "q" => scalar(self.h.q().clone()),
            _ => None,
        }
    }

    fn nat(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(ExprErrorKind::MalformedLiteral));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ExprError {
                kind: ExprErrorKind::MalformedLiteral,
                offset: start,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfcalc_core::coeff::FieldSpec;
    use hopfcalc_core::hopf::catalog::{self, AlgebraName, PqPreset, GA, GF, GS};
    use hopfcalc_core::freealg::Word;

    fn atilde() -> HopfPresentation {
        catalog::build(AlgebraName::Atilde, &FieldSpec::Cyclotomic3, PqPreset::Zero).unwrap()
    }

    #[test]
    fn f_definition_parses_to_the_generator() {
        let h = atilde();
        let f = parse_expression(&h, "x*a + (r+1)*a*x + ((r+2)/3)*(a - a^2)").unwrap();
        assert_eq!(f, h.generator_poly(GF));
    }

    #[test]
    fn juxtaposed_run_with_trailing_power() {
        let h = atilde();
        let viaruns = parse_expression(&h, "axa^2").unwrap();
        let explicit = parse_expression(&h, "a*x*a*a").unwrap();
        assert_eq!(viaruns, explicit);
    }

    #[test]
    fn cube_relation_reduces_to_zero() {
        let h = atilde();
        let e = parse_expression(&h, "a^3 - 1").unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn truncated_input_reports_offset() {
        let h = atilde();
        let err = parse_expression(&h, "x + ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.kind, ExprErrorKind::UnexpectedEnd);
    }

    #[test]
    fn unknown_identifier_reports_position() {
        let h = atilde();
        let err = parse_expression(&h, "a*w").unwrap_err();
        assert!(matches!(err.kind, ExprErrorKind::UnknownIdentifier(_)));
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn unbalanced_parens_rejected() {
        let h = atilde();
        let err = parse_expression(&h, "(a + b").unwrap_err();
        assert_eq!(err.kind, ExprErrorKind::UnbalancedParens);
    }

    #[test]
    fn division_requires_constants() {
        let h = atilde();
        assert!(parse_expression(&h, "a/2").is_ok());
        let err = parse_expression(&h, "a/b").unwrap_err();
        assert_eq!(err.kind, ExprErrorKind::BadDivisor);
    }

    #[test]
    fn aliases_and_scalars_resolve() {
        let h = atilde();
        // x = s at (0,0): q = 0
        let x = parse_expression(&h, "x + q*a").unwrap();
        assert_eq!(x, NcPoly::word(Word::generator(GS), h.spec()));
        let omega = parse_expression(&h, "Omega").unwrap();
        assert_eq!(&omega, h.alias("Omega").unwrap());
    }

    #[test]
    fn printer_round_trips_known_elements() {
        let h = atilde();
        for name in ["x", "y", "E", "K", "Omega", "c", "z"] {
            let p = h.alias(name).unwrap().clone();
            let text = print_expression(&h, &p);
            assert_eq!(parse_expression(&h, &text).unwrap(), p, "{name}: {text}");
        }
        let zero = NcPoly::zero();
        assert_eq!(
            parse_expression(&h, &print_expression(&h, &zero)).unwrap(),
            zero
        );
        let a = h.generator_poly(GA);
        let text = print_expression(&h, &a);
        assert_eq!(parse_expression(&h, &text).unwrap(), a);
    }
}
