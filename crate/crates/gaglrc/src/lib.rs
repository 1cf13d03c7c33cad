//! Construction and verification of locally recoverable codes (LRCs) built by
//! evaluating polynomials at non-rational places of the rational function
//! field GF(q)(x) and re-encoding each residue with a short inner code.
//!
//! The crate provides:
//! - exact arithmetic in GF(p^m) ([`field`]),
//! - places, Riemann-Roch spaces and residue maps of GF(q)(x) ([`function_field`]),
//! - generic linear codes with distance search and erasure recovery ([`code`]),
//! - the LRC builders, local repair and parameter reports ([`lrc`]),
//! - Singleton-like, Gilbert-Varshamov-type, Drinfeld-Vladut and tower bound
//!   calculators ([`bounds`]),
//! - a text descriptor / matrix file layer shared with the CLI ([`descriptor`]).

pub mod bounds;
pub mod code;
pub mod descriptor;
pub mod field;
pub mod function_field;
pub mod lrc;
mod matrix;
pub mod poly;
