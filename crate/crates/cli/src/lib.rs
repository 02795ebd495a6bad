//! Command-line front end for the hopfcalc exact Hopf-algebra engine.

pub mod expr;
pub mod hpf;
pub mod report;
pub mod suite;
