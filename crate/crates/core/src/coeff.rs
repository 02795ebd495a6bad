//! Exact coefficient arithmetic over the supported ground fields.
//!
//! Three kinds of fields are supported: the rationals ℚ, the cyclotomic field
//! ℚ(r) with r² + r + 1 = 0, and prime fields F_p carrying a designated
//! primitive cube root of unity. Every scalar in the engine is a
//! [`FieldElement`]; elements of different fields never mix.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Description of a ground field. Fixed once per engine instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// ℚ. Has no cube root of unity.
    Rational,
    /// ℚ(r) = ℚ[r]/(r² + r + 1).
    Cyclotomic3,
    /// F_p with `root` serving as the primitive cube root of unity.
    Prime { p: u64, root: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffError {
    DivisionByZero,
    MixedFields,
    /// The field has no primitive cube root of unity.
    NoRootAvailable,
    InvalidFieldSpec(String),
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::DivisionByZero => write!(f, "division by zero"),
            CoeffError::MixedFields => write!(f, "operands from different fields"),
            CoeffError::NoRootAvailable => write!(f, "no cube root available"),
            CoeffError::InvalidFieldSpec(msg) => write!(f, "invalid field spec: {msg}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// F_p with a chosen cube root. Rejects non-primes, p ∈ {2, 3}, and
    /// residues that are not primitive cube roots of unity.
    pub fn prime(p: u64, root: u64) -> Result<FieldSpec, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::InvalidFieldSpec(String::from("p is not prime")));
        }
        if p == 2 || p == 3 {
            return Err(CoeffError::InvalidFieldSpec(String::from(
                "p must differ from 2 and 3",
            )));
        }
        let root = root % p;
        if root <= 1 {
            return Err(CoeffError::InvalidFieldSpec(String::from(
                "root must be a nontrivial residue",
            )));
        }
        if pow_mod(root, 3, p) != 1 {
            return Err(CoeffError::InvalidFieldSpec(String::from(
                "root^3 != 1 mod p",
            )));
        }
        Ok(FieldSpec::Prime { p, root })
    }

    /// F₇ with root 2, the preset cross-check field.
    pub fn f7() -> FieldSpec {
        FieldSpec::Prime { p: 7, root: 2 }
    }

    /// F₁₃ with root 3, the smoke-test field.
    pub fn f13() -> FieldSpec {
        FieldSpec::Prime { p: 13, root: 3 }
    }

    pub fn zero(&self) -> FieldElement {
        self.integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Cyclotomic3 => FieldElement::Cyclotomic {
                re: BigRational::from(BigInt::from(n)),
                rc: BigRational::zero(),
            },
            FieldSpec::Prime { p, .. } => {
                let v = n.rem_euclid(*p as i64) as u64;
                FieldElement::Prime { value: v, p: *p }
            }
        }
    }

    /// The fraction n/d. Panics if d = 0.
    pub fn ratio(&self, n: i64, d: i64) -> FieldElement {
        assert!(d != 0, "zero denominator in field literal");
        let num = self.integer(n);
        let den = self.integer(d);
        num.checked_div(&den).expect("denominator vanishes in this field")
    }

    /// The primitive cube root of unity r with r² + r + 1 = 0.
    pub fn root(&self) -> Result<FieldElement, CoeffError> {
        match self {
            FieldSpec::Rational => Err(CoeffError::NoRootAvailable),
            FieldSpec::Cyclotomic3 => Ok(FieldElement::Cyclotomic {
                re: BigRational::zero(),
                rc: BigRational::one(),
            }),
            FieldSpec::Prime { p, root } => Ok(FieldElement::Prime { value: *root, p: *p }),
        }
    }

    /// Field characteristic (0 for ℚ and ℚ(r)).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p, .. } => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic3 => write!(f, "Q(r)"),
            FieldSpec::Prime { p, root } => write!(f, "F{p}(root={root})"),
        }
    }
}

/// An exact scalar. Canonical form is unique per value: fractions are kept
/// reduced with positive denominators by `BigRational`, cyclotomic elements
/// are stored as α + βr with r² renormalized to −1 − r, prime-field residues
/// live in [0, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Cyclotomic { re: BigRational, rc: BigRational },
    Prime { value: u64, p: u64 },
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_zero(),
            FieldElement::Cyclotomic { re, rc } => re.is_zero() && rc.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_one(),
            FieldElement::Cyclotomic { re, rc } => re.is_one() && rc.is_zero(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, rhs: &FieldElement) -> bool {
        match (self, rhs) {
            (FieldElement::Rational(_), FieldElement::Rational(_)) => true,
            (FieldElement::Cyclotomic { .. }, FieldElement::Cyclotomic { .. }) => true,
            (FieldElement::Prime { p: p1, .. }, FieldElement::Prime { p: p2, .. }) => p1 == p2,
            _ => false,
        }
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement, CoeffError> {
        if !self.same_field(rhs) {
            return Err(CoeffError::MixedFields);
        }
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (
                FieldElement::Cyclotomic { re: a1, rc: b1 },
                FieldElement::Cyclotomic { re: a2, rc: b2 },
            ) => FieldElement::Cyclotomic { re: a1 + a2, rc: b1 + b2 },
            (FieldElement::Prime { value: a, p }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime { value: (a + b) % p, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.checked_add(&rhs.negated())
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement, CoeffError> {
        if !self.same_field(rhs) {
            return Err(CoeffError::MixedFields);
        }
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (
                FieldElement::Cyclotomic { re: a1, rc: b1 },
                FieldElement::Cyclotomic { re: a2, rc: b2 },
            ) => {
                // (a1 + b1 r)(a2 + b2 r), renormalized with r² = −1 − r.
                let cross = a1 * b2 + a2 * b1;
                let sq = b1 * b2;
                FieldElement::Cyclotomic { re: a1 * a2 - &sq, rc: cross - sq }
            }
            (FieldElement::Prime { value: a, p }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.checked_mul(&rhs.inverse()?)
    }

    pub fn inverse(&self) -> Result<FieldElement, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Cyclotomic { re: a, rc: b } => {
                // 1/(a + br) = (a − b − br) / (a² − ab + b²); the norm only
                // vanishes at a = b = 0.
                let norm = a * a - a * b + b * b;
                FieldElement::Cyclotomic { re: (a - b) / &norm, rc: -b / &norm }
            }
            FieldElement::Prime { value, p } => {
                FieldElement::Prime { value: pow_mod(*value, p - 2, *p), p: *p }
            }
        })
    }

    pub fn negated(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Cyclotomic { re, rc } => FieldElement::Cyclotomic { re: -re, rc: -rc },
            FieldElement::Prime { value, p } => {
                FieldElement::Prime { value: (p - value) % p, p: *p }
            }
        }
    }

    /// Infallible sum; panics on mixed fields (a programming error inside a
    /// single presentation, where all scalars share one spec).
    pub fn add(&self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("mixed-field addition")
    }

    pub fn sub(&self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("mixed-field subtraction")
    }

    pub fn mul(&self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("mixed-field multiplication")
    }

    /// The spec this element belongs to. Prime specs lose the designated root
    /// (it is not stored per element), so this is for arithmetic context only.
    pub fn spec_kind(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Cyclotomic { .. } => FieldSpec::Cyclotomic3,
            FieldElement::Prime { p, .. } => FieldSpec::Prime { p: *p, root: 0 },
        }
    }
}

fn fmt_rational(a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if a.denom().is_one() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => fmt_rational(a, f),
            FieldElement::Cyclotomic { re, rc } => {
                if rc.is_zero() {
                    fmt_rational(re, f)
                } else if re.is_zero() {
                    if rc.is_one() {
                        write!(f, "r")
                    } else {
                        fmt_rational(rc, f)?;
                        write!(f, "*r")
                    }
                } else {
                    fmt_rational(re, f)?;
                    if rc.is_negative() {
                        write!(f, " - ")?;
                        let abs = -rc;
                        if abs.is_one() {
                            write!(f, "r")
                        } else {
                            fmt_rational(&abs, f)?;
                            write!(f, "*r")
                        }
                    } else {
                        write!(f, " + ")?;
                        if rc.is_one() {
                            write!(f, "r")
                        } else {
                            fmt_rational(rc, f)?;
                            write!(f, "*r")
                        }
                    }
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
