//! Text descriptors for code instances, and the matrix file format used for
//! printing and golden comparisons.
//!
//! Descriptor grammar (one directive per line, `#` starts a comment):
//!
//! ```text
//! field <p> <m>
//! divisor <degree>
//! place <c0,c1,...,1>          # compact coefficients, low degree first
//! inner rs <pt> <pt> ...       # Reed-Solomon, dimension = place degree
//! inner parity <r>             # the [r+1, r, 2] single parity check code
//! inner matrix <k> <n>         # explicit generator, followed by k rows
//! row <e> <e> ...
//! ```
//!
//! The i-th `inner` directive is attached to the i-th `place`. Matrix files
//! start with a `q n k` header followed by k rows of n space-separated
//! entries; extension-field entries are comma-joined GF(p) coefficients.

use std::fmt::Write as _;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::field::{Field, FieldElement, FieldError};
use crate::function_field::{FunctionFieldError, Place};
use crate::lrc::{build_gag_lrc, GagLrcCode, LrcError};
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("descriptor must declare a field before anything else")]
    MissingField,
    #[error("descriptor is missing a divisor directive")]
    MissingDivisor,
    #[error("descriptor declares no places")]
    NoPlaces,
    #[error("line {line}: {source}")]
    BadField {
        line: usize,
        source: FieldError,
    },
    #[error("line {line}: {source}")]
    BadPlace {
        line: usize,
        source: FunctionFieldError,
    },
    #[error("line {line}: {source}")]
    BadInner {
        line: usize,
        source: CodeError,
    },
    #[error(transparent)]
    Build(#[from] LrcError),
}

/// Inner-code specification attached to one place.
#[derive(Debug, Clone, PartialEq)]
pub enum InnerSpec {
    Rs { points: Vec<FieldElement> },
    Parity { r: usize },
    Matrix { rows: Vec<Vec<FieldElement>> },
}

/// A parsed code descriptor: the base field, the pole order at infinity, the
/// evaluation places in order, and one inner code per place.
#[derive(Debug, Clone)]
pub struct Descriptor {
    pub field: Field,
    pub divisor_degree: usize,
    pub places: Vec<Place>,
    pub inner: Vec<InnerSpec>,
}

impl Descriptor {
    pub fn parse(text: &str) -> Result<Descriptor, DescriptorError> {
        let mut field: Option<Field> = None;
        let mut divisor: Option<usize> = None;
        let mut places = Vec::new();
        let mut inner: Vec<InnerSpec> = Vec::new();
        let mut pending_rows: Option<(usize, usize, Vec<Vec<FieldElement>>, usize)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let head = tokens.next().unwrap();
            let rest: Vec<&str> = tokens.collect();

            if let Some((k, n, mut rows, decl_line)) = pending_rows.take() {
                if head != "row" {
                    return Err(DescriptorError::Syntax {
                        line,
                        msg: format!("expected a row of the matrix declared on line {decl_line}"),
                    });
                }
                let f = field.as_ref().expect("field precedes matrix");
                let row = parse_elements(f, &rest, line)?;
                if row.len() != n {
                    return Err(DescriptorError::Syntax {
                        line,
                        msg: format!("row has {} entries, expected {n}", row.len()),
                    });
                }
                rows.push(row);
                if rows.len() < k {
                    pending_rows = Some((k, n, rows, decl_line));
                } else {
                    inner.push(InnerSpec::Matrix { rows });
                }
                continue;
            }

            match head {
                "field" => {
                    if field.is_some() {
                        return Err(DescriptorError::Syntax {
                            line,
                            msg: "duplicate field directive".into(),
                        });
                    }
                    let [p, m] = two_ints(&rest, line, "field <p> <m>")?;
                    field = Some(
                        Field::new(p, m as usize)
                            .map_err(|source| DescriptorError::BadField { line, source })?,
                    );
                }
                "divisor" => {
                    let [d] = one_int(&rest, line, "divisor <degree>")?;
                    divisor = Some(d as usize);
                }
                "place" => {
                    let f = field.as_ref().ok_or(DescriptorError::MissingField)?;
                    let [compact] = one_token(&rest, line, "place <coefficients>")?;
                    let poly = Polynomial::parse_compact(f, compact).map_err(|source| {
                        DescriptorError::BadField { line, source }
                    })?;
                    places.push(
                        Place::finite(poly)
                            .map_err(|source| DescriptorError::BadPlace { line, source })?,
                    );
                }
                "inner" => {
                    let f = field.as_ref().ok_or(DescriptorError::MissingField)?;
                    match rest.first().copied() {
                        Some("rs") => {
                            let points = parse_elements(f, &rest[1..], line)?;
                            inner.push(InnerSpec::Rs { points });
                        }
                        Some("parity") => {
                            let [r] = one_int(&rest[1..], line, "inner parity <r>")?;
                            inner.push(InnerSpec::Parity { r: r as usize });
                        }
                        Some("matrix") => {
                            let [k, n] = two_ints(&rest[1..], line, "inner matrix <k> <n>")?;
                            if k == 0 || n == 0 {
                                return Err(DescriptorError::Syntax {
                                    line,
                                    msg: "matrix dimensions must be positive".into(),
                                });
                            }
                            pending_rows = Some((k as usize, n as usize, Vec::new(), line));
                        }
                        _ => {
                            return Err(DescriptorError::Syntax {
                                line,
                                msg: "expected inner rs | parity | matrix".into(),
                            })
                        }
                    }
                }
                other => {
                    return Err(DescriptorError::Syntax {
                        line,
                        msg: format!("unknown directive '{other}'"),
                    })
                }
            }
        }
        if let Some((_, _, rows, decl_line)) = pending_rows {
            return Err(DescriptorError::Syntax {
                line: decl_line,
                msg: format!("matrix declared with more rows than provided ({} given)", rows.len()),
            });
        }
        let field = field.ok_or(DescriptorError::MissingField)?;
        let divisor_degree = divisor.ok_or(DescriptorError::MissingDivisor)?;
        if places.is_empty() {
            return Err(DescriptorError::NoPlaces);
        }
        Ok(Descriptor {
            field,
            divisor_degree,
            places,
            inner,
        })
    }

    /// Canonical text form; `parse` round-trips it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "field {} {}",
            self.field.characteristic(),
            self.field.extension_degree()
        );
        let _ = writeln!(out, "divisor {}", self.divisor_degree);
        for place in &self.places {
            let _ = writeln!(out, "place {}", place.poly().expect("finite place").to_compact());
        }
        for spec in &self.inner {
            match spec {
                InnerSpec::Rs { points } => {
                    let pts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                    let _ = writeln!(out, "inner rs {}", pts.join(" "));
                }
                InnerSpec::Parity { r } => {
                    let _ = writeln!(out, "inner parity {r}");
                }
                InnerSpec::Matrix { rows } => {
                    let k = rows.len();
                    let n = rows.first().map_or(0, |r| r.len());
                    let _ = writeln!(out, "inner matrix {k} {n}");
                    for row in rows {
                        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                        let _ = writeln!(out, "row {}", cells.join(" "));
                    }
                }
            }
        }
        out
    }

    /// Instantiates the inner codes and assembles the full code.
    pub fn build(&self) -> Result<GagLrcCode, DescriptorError> {
        let inner: Result<Vec<LinearCode>, DescriptorError> = self
            .inner
            .iter()
            .enumerate()
            .map(|(i, spec)| {
                match spec {
                    InnerSpec::Rs { points } => {
                        // The inner dimension must equal the degree of the
                        // matching place; the assembly re-checks this.
                        let deg = self.places.get(i).map_or(1, |p| p.degree());
                        LinearCode::reed_solomon(self.field.clone(), points, deg)
                    }
                    InnerSpec::Parity { r } => {
                        LinearCode::single_parity_check(self.field.clone(), *r)
                    }
                    InnerSpec::Matrix { rows } => {
                        LinearCode::from_generator(self.field.clone(), rows.clone())
                    }
                }
                .map_err(|source| DescriptorError::BadInner { line: 0, source })
            })
            .collect();
        Ok(build_gag_lrc(
            &self.field,
            &self.places,
            self.divisor_degree,
            inner?,
        )?)
    }
}

fn parse_elements(
    field: &Field,
    tokens: &[&str],
    line: usize,
) -> Result<Vec<FieldElement>, DescriptorError> {
    tokens
        .iter()
        .map(|t| {
            field
                .parse_element(t)
                .map_err(|source| DescriptorError::BadField { line, source })
        })
        .collect()
}

fn one_token<'a>(rest: &[&'a str], line: usize, usage: &str) -> Result<[&'a str; 1], DescriptorError> {
    match rest {
        [a] => Ok([a]),
        _ => Err(DescriptorError::Syntax {
            line,
            msg: format!("usage: {usage}"),
        }),
    }
}

fn one_int(rest: &[&str], line: usize, usage: &str) -> Result<[u64; 1], DescriptorError> {
    let [a] = one_token(rest, line, usage)?;
    a.parse()
        .map(|v| [v])
        .map_err(|_| DescriptorError::Syntax {
            line,
            msg: format!("usage: {usage}"),
        })
}

fn two_ints(rest: &[&str], line: usize, usage: &str) -> Result<[u64; 2], DescriptorError> {
    match rest {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(x), Ok(y)) => Ok([x, y]),
            _ => Err(DescriptorError::Syntax {
                line,
                msg: format!("usage: {usage}"),
            }),
        },
        _ => Err(DescriptorError::Syntax {
            line,
            msg: format!("usage: {usage}"),
        }),
    }
}

/// Matrix file format: "q n k" header, then k rows of n entries.
pub fn render_matrix(field: &Field, rows: &[Vec<FieldElement>]) -> String {
    let k = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut out = format!("{} {} {}\n", field.order(), n, k);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Matrix of residue vectors: entries are comma-joined coordinate lists in
/// the basis {1, x, ...} of each residue field.
pub fn render_vector_matrix(field: &Field, rows: &[Vec<Vec<FieldElement>>]) -> String {
    let k = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut out = format!("{} {} {}\n", field.order(), n, k);
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|vec| {
                vec.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
