//! Dense polynomials over a [`Field`], low degree first.
//!
//! These carry both the functions of the Riemann-Roch spaces L(m·P∞) and the
//! monic irreducibles defining finite places.

use std::fmt;

use crate::field::{Field, FieldElement, FieldError};

/// A polynomial with coefficients in a fixed field. Canonical form: no
/// trailing zero coefficients; the zero polynomial has an empty vector.
#[derive(Clone, Debug)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: Field) -> Polynomial {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Polynomial {
        let one = field.one();
        Polynomial::new(field, vec![one])
    }

    pub fn constant(field: Field, c: FieldElement) -> Polynomial {
        Polynomial::new(field, vec![c])
    }

    /// x^d
    pub fn monomial(field: Field, d: usize) -> Polynomial {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = field.one();
        Polynomial { field, coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(&self.field.one())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.field.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial::new(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Polynomial::new(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field.clone());
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &t);
            }
        }
        Polynomial::new(self.field.clone(), coeffs)
    }

    /// Remainder of `self` modulo a monic `divisor`.
    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        assert_eq!(self.field, divisor.field);
        assert!(divisor.is_monic(), "divisor must be monic");
        let db = divisor.degree().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let lead = r.last().unwrap().clone();
            let dr = r.len() - 1;
            if !lead.is_zero() {
                let shift = dr - db;
                for j in 0..db {
                    let t = self.field.mul(&lead, &divisor.coeffs[j]);
                    r[shift + j] = self.field.sub(&r[shift + j], &t);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Polynomial::new(self.field.clone(), r)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }

    /// Compact coefficient-list form: the GF(p) coefficients of all field
    /// elements flattened low-degree-first, comma separated. For prime fields
    /// this is the usual "c0,c1,...". Includes the leading coefficient.
    pub fn to_compact(&self) -> String {
        let mut parts = Vec::new();
        for el in &self.coeffs {
            for &c in el.coeffs() {
                parts.push(c.to_string());
            }
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        parts.join(",")
    }

    /// Parses the compact form. The flat list must contain a multiple of the
    /// extension degree of GF(p) coefficients.
    pub fn parse_compact(field: &Field, s: &str) -> Result<Polynomial, FieldError> {
        let flat: Result<Vec<u64>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect();
        let flat = flat.map_err(|_| FieldError::BadElement(s.to_string()))?;
        let m = field.extension_degree();
        if flat.is_empty() || flat.len() % m != 0 {
            return Err(FieldError::BadElement(s.to_string()));
        }
        if flat.iter().any(|&c| c >= field.characteristic()) {
            return Err(FieldError::BadElement(s.to_string()));
        }
        let coeffs = flat
            .chunks(m)
            .map(|chunk| field.element(chunk.to_vec()))
            .collect();
        Ok(Polynomial::new(field.clone(), coeffs))
    }
}

impl fmt::Display for Polynomial {
    /// Human form "c0 + c1*x + c2*x^2", zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if self.field.extension_degree() == 1 {
                c.to_string()
            } else {
                format!("({c})")
            };
            let term = match i {
                0 => coeff,
                1 if c == &self.field.one() => "x".to_string(),
                1 => format!("{coeff}*x"),
                _ if c == &self.field.one() => format!("x^{i}"),
                _ => format!("{coeff}*x^{i}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}
