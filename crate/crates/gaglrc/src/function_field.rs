//! The rational function field GF(q)(x): places, Riemann-Roch spaces L(m·P∞)
//! and residue maps at non-rational places.
//!
//! A finite place of degree r is a monic irreducible polynomial of degree r;
//! its residue field GF(q)[x]/(P) is isomorphic to GF(q^r) and carries the
//! fixed basis {1, x, ..., x^{r-1}}. Genus 0 only: divisors are restricted to
//! a single pole at infinity.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FunctionFieldError {
    #[error("place polynomial must be monic")]
    NotMonic,
    #[error("place polynomial must be irreducible")]
    Reducible,
    #[error("place polynomial must have degree at least 1")]
    ConstantPoly,
    #[error("evaluation at the infinite place is not supported")]
    InfinitePlace,
    #[error("polynomial and place belong to different fields")]
    FieldMismatch,
}

/// A place of GF(q)(x): a monic irreducible polynomial, or the place at
/// infinity (degree 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(Polynomial),
    Infinity,
}

impl Place {
    /// Validates monicity and irreducibility before wrapping.
    pub fn finite(poly: Polynomial) -> Result<Place, FunctionFieldError> {
        if poly.degree().is_none() || poly.degree() == Some(0) {
            return Err(FunctionFieldError::ConstantPoly);
        }
        if !poly.is_monic() {
            return Err(FunctionFieldError::NotMonic);
        }
        if !is_irreducible(&poly) {
            return Err(FunctionFieldError::Reducible);
        }
        Ok(Place::Finite(poly))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap(),
            Place::Infinity => 1,
        }
    }

    pub fn poly(&self) -> Option<&Polynomial> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Finite(_))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// The divisor m·P∞ (genus-0 restriction: support is exactly {P∞}, disjoint
/// from every finite evaluation place by construction).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Divisor {
    pole_order: usize,
}

impl Divisor {
    pub fn pole_at_infinity(pole_order: usize) -> Divisor {
        Divisor { pole_order }
    }

    pub fn degree(&self) -> usize {
        self.pole_order
    }
}

/// Irreducibility over GF(q) by trial division with every monic polynomial of
/// degree at most deg/2. Brute force, adequate for the supported degrees.
pub fn is_irreducible(f: &Polynomial) -> bool {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        for divisor in enumerate_monic(f.field(), d) {
            if f.rem(&divisor).is_zero() {
                return false;
            }
        }
    }
    true
}

/// All monic polynomials of degree `d` over the field, in lexicographic order
/// on coefficient vectors (c0 compared first, element enumeration order).
pub fn enumerate_monic(field: &Field, d: usize) -> Vec<Polynomial> {
    let q = field.order();
    let total = (q as u128).pow(d as u32);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = field.one();
        let mut v = idx;
        for i in (0..d).rev() {
            coeffs[i] = field.from_index((v % q as u128) as u64);
            v /= q as u128;
        }
        out.push(Polynomial::new(field.clone(), coeffs));
    }
    out
}

/// All places of degree `r`, in lexicographic order on the coefficient
/// vectors of their defining polynomials. For r = 1 the place at infinity is
/// appended last, giving q + 1 rational places.
pub fn enumerate_places(field: &Field, r: usize) -> Vec<Place> {
    assert!(r >= 1);
    let mut places: Vec<Place> = enumerate_monic(field, r)
        .into_iter()
        .filter(is_irreducible)
        .map(Place::Finite)
        .collect();
    if r == 1 {
        places.push(Place::Infinity);
    }
    places
}

/// The fixed basis {1, x, ..., x^m} of L(m·P∞); dimension m + 1.
pub fn riemann_roch_basis(field: &Field, m: usize) -> Vec<Polynomial> {
    (0..=m)
        .map(|d| Polynomial::monomial(field.clone(), d))
        .collect()
}

/// Coefficient vector of f mod P in the basis {1, x, ..., x^{r-1}} of the
/// residue field, length deg(P). Linear in f.
pub fn residue_at_place(
    f: &Polynomial,
    place: &Place,
) -> Result<Vec<FieldElement>, FunctionFieldError> {
    let poly = place.poly().ok_or(FunctionFieldError::InfinitePlace)?;
    if f.field() != poly.field() {
        return Err(FunctionFieldError::FieldMismatch);
    }
    let r = place.degree();
    let rem = f.rem(poly);
    Ok((0..r).map(|i| rem.coeff(i)).collect())
}
