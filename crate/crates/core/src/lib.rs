//! Exact computer-algebra engine for finitely presented Hopf algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`coeff`] — exact scalars over ℚ, ℚ(r) with r² + r + 1 = 0, or F_p with a
//!   chosen primitive cube root of unity,
//! * [`freealg`] — words, noncommutative polynomials and tensor powers over a
//!   fixed generator alphabet,
//! * [`rewrite`] — diamond-lemma rewriting: normal forms, ambiguity
//!   enumeration, confluence certification, bounded completion and basis
//!   enumeration,
//! * [`linalg`] — dense and sparse exact linear algebra,
//! * [`hopf`] — Hopf presentations (coproduct, counit, antipode, structural
//!   checks) and the built-in algebra catalog,
//! * [`cleft`] — the quotient coalgebra A/AB⁺ with its cleaving map,
//! * [`primitives`] — exhaustive weight-truncated skew-primitive solving,
//! * [`nichols`] — braided vector spaces and quantum symmetrizers.
//!
//! Everything is `no_std` + `alloc`; all arithmetic is exact.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cleft;
pub mod coeff;
pub mod freealg;
pub mod hopf;
pub mod linalg;
pub mod nichols;
pub mod primitives;
pub mod rewrite;

pub use coeff::{CoeffError, FieldElement, FieldSpec};
pub use freealg::{NcPoly, TensorPoly, Word};
pub use rewrite::{MonomialOrder, RewriteRule, RewriteSystem};
