//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! Extension fields use a polynomial basis over GF(p) with a deterministic
//! modulus: the lexicographically least monic irreducible of degree `m`,
//! coefficients compared low-degree-first as integers. Two calls to
//! [`Field::new`] with the same `(p, m)` therefore always agree.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order. Everything in this crate runs on small
/// alphabets; enumeration budgets elsewhere are the real constraint.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("field order {0} exceeds the supported limit {MAX_FIELD_ORDER}")]
    OrderTooLarge(u128),
    #[error("element does not belong to this field")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("cannot parse field element from {0:?}")]
    BadElement(String),
}

#[derive(Debug)]
struct FieldInner {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible of degree `m` over GF(p), low degree first,
    /// length `m + 1`. `None` for prime fields.
    modulus: Option<Vec<u64>>,
}

/// A finite field GF(p^m). Cheap to clone and safe to share; immutable after
/// construction.
#[derive(Clone, Debug)]
pub struct Field {
    inner: Arc<FieldInner>,
}

/// An element of a [`Field`], stored as its coefficient vector over GF(p),
/// low degree first, always reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    p: u64,
    coeffs: Vec<u64>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // The modulus is a deterministic function of (p, m).
        self.inner.p == other.inner.p && self.inner.m == other.inner.m
    }
}
impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Field {
    /// Builds GF(p^m). Deterministic: the modulus only depends on `(p, m)`.
    pub fn new(p: u64, m: usize) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if m < 1 {
            return Err(FieldError::BadExtensionDegree);
        }
        let q = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::OrderTooLarge(q));
        }
        let modulus = if m == 1 { None } else { Some(find_modulus(p, m)) };
        Ok(Field {
            inner: Arc::new(FieldInner {
                p,
                m,
                q: q as u64,
                modulus,
            }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn extension_degree(&self) -> usize {
        self.inner.m
    }

    pub fn order(&self) -> u64 {
        self.inner.q
    }

    /// The defining modulus, low degree first (absent for prime fields).
    pub fn modulus(&self) -> Option<&[u64]> {
        self.inner.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            p: self.inner.p,
            coeffs: vec![0; self.inner.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_index(1)
    }

    /// Canonicalizes `coeffs` (reduced mod p, padded to length m) into an
    /// element. Extra high coefficients beyond `m` are rejected by panic in
    /// debug; callers parse through [`Field::parse_element`] instead.
    pub fn element(&self, mut coeffs: Vec<u64>) -> FieldElement {
        assert!(coeffs.len() <= self.inner.m, "coefficient vector too long");
        coeffs.resize(self.inner.m, 0);
        for c in coeffs.iter_mut() {
            *c %= self.inner.p;
        }
        FieldElement {
            p: self.inner.p,
            coeffs,
        }
    }

    /// The element whose coefficient vector is the base-p digits of `idx`,
    /// `c0` least significant. Index 0 is zero, index 1 is one.
    pub fn from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.inner.q, "index out of range");
        let mut coeffs = Vec::with_capacity(self.inner.m);
        let mut v = idx;
        for _ in 0..self.inner.m {
            coeffs.push(v % self.inner.p);
            v /= self.inner.p;
        }
        FieldElement {
            p: self.inner.p,
            coeffs,
        }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        self.check(a);
        let mut idx = 0;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.inner.p + c;
        }
        idx
    }

    /// All q elements, zero first, in lexicographic order on coefficient
    /// vectors (highest coefficient most significant).
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.inner.q).map(|i| self.from_index(i)).collect()
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.p == self.inner.p
            && a.coeffs.len() == self.inner.m
            && a.coeffs.iter().all(|&c| c < self.inner.p)
    }

    fn check(&self, a: &FieldElement) {
        assert!(self.contains(a), "element does not belong to {self}");
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let p = self.inner.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % p)
            .collect();
        FieldElement { p, coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check(a);
        let p = self.inner.p;
        let coeffs = a.coeffs.iter().map(|&x| (p - x) % p).collect();
        FieldElement { p, coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let p = self.inner.p;
        let m = self.inner.m;
        if m == 1 {
            return FieldElement {
                p,
                coeffs: vec![a.coeffs[0] * b.coeffs[0] % p],
            };
        }
        // Schoolbook product then reduction by the monic modulus.
        let mut tmp = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                tmp[i + j] = (tmp[i + j] + x * y) % p;
            }
        }
        let modulus = self.inner.modulus.as_ref().unwrap();
        for i in (m..2 * m - 1).rev() {
            let c = tmp[i];
            if c == 0 {
                continue;
            }
            tmp[i] = 0;
            for j in 0..m {
                tmp[i - m + j] = (tmp[i - m + j] + c * (p - modulus[j]) % p) % p;
            }
        }
        tmp.truncate(m);
        FieldElement { p, coeffs: tmp }
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        self.check(a);
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a);
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.inner.q - 2))
    }

    // Checked variants for callers that cannot guarantee field membership
    // (CLI inputs, cross-field plumbing).

    pub fn try_add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(FieldError::MixedFields);
        }
        Ok(self.add(a, b))
    }

    pub fn try_sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(FieldError::MixedFields);
        }
        Ok(self.sub(a, b))
    }

    pub fn try_mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(FieldError::MixedFields);
        }
        Ok(self.mul(a, b))
    }

    pub fn try_inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.contains(a) {
            return Err(FieldError::MixedFields);
        }
        self.inv(a)
    }

    pub fn try_pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement, FieldError> {
        if !self.contains(a) {
            return Err(FieldError::MixedFields);
        }
        Ok(self.pow(a, e))
    }

    /// Parses the textual rendering: a plain integer for prime fields,
    /// "c0,c1,..." (low degree first) for extensions.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != self.inner.m {
            return Err(FieldError::BadElement(s.to_string()));
        }
        let mut coeffs = Vec::with_capacity(parts.len());
        for part in parts {
            let c: u64 = part
                .trim()
                .parse()
                .map_err(|_| FieldError::BadElement(s.to_string()))?;
            if c >= self.inner.p {
                return Err(FieldError::BadElement(s.to_string()));
            }
            coeffs.push(c);
        }
        Ok(FieldElement {
            p: self.inner.p,
            coeffs,
        })
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Helpers on dense polynomials over GF(p) (plain u64 coefficients, low degree
// first) used only for the modulus search, before a Field exists.

fn pp_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` by monic `b` over GF(p).
fn pp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = pp_deg(b).expect("divisor must be nonzero");
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    let mut r = a.to_vec();
    while let Some(dr) = pp_deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr];
        let shift = dr - db;
        for j in 0..=db {
            r[shift + j] = (r[shift + j] + c * (p - b[j]) % p) % p;
        }
    }
    r
}

/// Irreducibility of a monic polynomial over GF(p) by trial division with
/// every monic polynomial of degree at most deg/2.
fn pp_is_irreducible(c: &[u64], p: u64) -> bool {
    let deg = match pp_deg(c) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        loop {
            if pp_deg(&pp_rem(c, &divisor, p)).is_none() {
                return false;
            }
            // Next monic polynomial of degree d, low coefficients fastest.
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                divisor[i] += 1;
                if divisor[i] < p {
                    break;
                }
                divisor[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree m over GF(p),
/// coefficients compared low-degree-first as integers.
fn find_modulus(p: u64, m: usize) -> Vec<u64> {
    let total = p.pow(m as u32);
    for idx in 0..total {
        // idx encodes (c0, ..., c_{m-1}) with c0 most significant so that
        // ascending idx is ascending lexicographic order on the vector.
        let mut candidate = vec![0u64; m + 1];
        candidate[m] = 1;
        let mut v = idx;
        for i in (0..m).rev() {
            candidate[i] = v % p;
            v /= p;
        }
        if pp_is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn gf4_modulus_is_the_unique_quadratic() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..])); // x^2 + x + 1
    }

    #[test]
    fn gf9_modulus_is_lexicographically_least() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 0, 1][..])); // x^2 + 1
        // Independent check: no root in GF(3), so the quadratic is irreducible.
        for a in 0..3u64 {
            assert_ne!((a * a + 1) % 3, 0);
        }
        // Every lexicographically smaller candidate has zero constant term
        // (x^2 + c1*x = x(x + c1)) and is rejected as reducible.
        for c1 in 0..3u64 {
            assert!(!pp_is_irreducible(&[0, c1, 1], 3));
        }
    }

    #[test]
    fn field_create_is_deterministic() {
        for (p, m) in [(2, 4), (3, 2), (5, 2), (2, 8)] {
            let a = Field::new(p, m).unwrap();
            let b = Field::new(p, m).unwrap();
            assert_eq!(a.modulus(), b.modulus());
        }
    }

    #[test]
    fn create_rejects_bad_input() {
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NonPrime(4));
        assert_eq!(Field::new(3, 0).unwrap_err(), FieldError::BadExtensionDegree);
        assert!(matches!(
            Field::new(2, 17).unwrap_err(),
            FieldError::OrderTooLarge(_)
        ));
    }

    #[test]
    fn gf3_arithmetic() {
        let f = Field::new(3, 1).unwrap();
        let two = f.from_index(2);
        assert_eq!(f.add(&two, &two), f.from_index(1));
        assert_eq!(f.inv(&two).unwrap(), two);
    }

    #[test]
    fn gf4_x_times_x() {
        let f = Field::new(2, 2).unwrap();
        let x = f.element(vec![0, 1]);
        let x_plus_1 = f.element(vec![1, 1]);
        assert_eq!(f.mul(&x, &x), x_plus_1);
    }

    #[test]
    fn enumeration_order() {
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(
            gf2.enumerate(),
            vec![gf2.from_index(0), gf2.from_index(1)]
        );
        let gf3 = Field::new(3, 1).unwrap();
        assert_eq!(gf3.enumerate().len(), 3);
        let gf4 = Field::new(2, 2).unwrap();
        let elems = gf4.enumerate();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], gf4.zero());
        assert_eq!(elems[1], gf4.one());
        assert_eq!(elems[2], gf4.element(vec![0, 1])); // x
        assert_eq!(elems[3], gf4.element(vec![1, 1])); // x + 1
    }

    #[test]
    fn mixed_fields_and_zero_inverse_are_errors() {
        let gf3 = Field::new(3, 1).unwrap();
        let gf5 = Field::new(5, 1).unwrap();
        let a = gf5.from_index(4);
        assert_eq!(
            gf3.try_add(&a, &gf3.one()).unwrap_err(),
            FieldError::MixedFields
        );
        assert_eq!(gf3.try_inv(&gf3.zero()).unwrap_err(), FieldError::ZeroInverse);
    }

    fn fields_under_test() -> Vec<Field> {
        vec![
            Field::new(2, 1).unwrap(),
            Field::new(3, 1).unwrap(),
            Field::new(2, 2).unwrap(),
            Field::new(3, 2).unwrap(),
            Field::new(5, 1).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(fi in 0usize..5, a in 0u64..9, b in 0u64..9, c in 0u64..9) {
            let f = &fields_under_test()[fi];
            let q = f.order();
            let (a, b, c) = (f.from_index(a % q), f.from_index(b % q), f.from_index(c % q));
            // Associativity and distributivity.
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            // Additive inverse.
            prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            // Multiplicative inverse.
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }

        #[test]
        fn fermat(fi in 0usize..5, a in 0u64..9) {
            let f = &fields_under_test()[fi];
            let q = f.order();
            let a = f.from_index(a % q);
            prop_assert_eq!(f.pow(&a, q), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(f.pow(&a, q - 1), f.one());
            }
        }
    }
}
