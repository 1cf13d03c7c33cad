//! Generic linear codes over GF(q): Reed-Solomon and single-parity-check
//! constructions, encoding, exhaustive minimum-distance search, certified
//! distance bounds and information-set erasure recovery.

use std::sync::OnceLock;

use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::matrix;

/// Default cap on the number of codewords the exhaustive distance search is
/// willing to enumerate.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 26;

/// Environment variable capping the distance-search worker count.
pub const THREADS_ENV: &str = "GAG_THREADS";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("evaluation points must be distinct")]
    DuplicatePoints,
    #[error("dimension {k} exceeds the number of evaluation points {n}")]
    DimensionExceedsLength { k: usize, n: usize },
    #[error("generator matrix does not have full row rank")]
    RankDeficient,
    #[error("generator matrix must be non-empty with rows of equal length")]
    MalformedGenerator,
    #[error("element does not belong to the code's field")]
    ForeignElement,
    #[error("message length {got} does not match code dimension {want}")]
    MessageLength { got: usize, want: usize },
    #[error("received word length {got} does not match code length {want}")]
    ReceivedLength { got: usize, want: usize },
    #[error("distance search needs {needed} codewords, over budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("unsupported weight claim {0}: only 2 and 3 are certifiable")]
    UnsupportedClaim(usize),
    #[error("certification failed: parity-check columns {columns:?} are dependent")]
    CertificationFailed { columns: Vec<usize> },
    #[error("witness encodes to weight {got}, below the certified lower bound {bound}")]
    BadWitness { got: usize, bound: usize },
    #[error("no invertible submatrix among the unerased positions")]
    RecoveryImpossible,
}

/// Certified distance information: `lower` is proven for every nonzero
/// codeword, `upper` is the weight of an explicit witness codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceBounds {
    pub lower: usize,
    pub upper: Option<usize>,
}

/// A linear [n, k] code given by a full-row-rank generator matrix. Messages
/// are rows; codewords are message x G. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    gen: Vec<Vec<FieldElement>>,
    n: usize,
    k: usize,
    d_exact: OnceLock<usize>,
}

pub fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|c| !c.is_zero()).count()
}

impl LinearCode {
    pub fn from_generator(field: Field, gen: Vec<Vec<FieldElement>>) -> Result<Self, CodeError> {
        let k = gen.len();
        let n = gen.first().map_or(0, |r| r.len());
        if k == 0 || n == 0 || gen.iter().any(|r| r.len() != n) {
            return Err(CodeError::MalformedGenerator);
        }
        if k > n {
            return Err(CodeError::DimensionExceedsLength { k, n });
        }
        if gen.iter().flatten().any(|e| !field.contains(e)) {
            return Err(CodeError::ForeignElement);
        }
        if matrix::rank(&field, &gen) != k {
            return Err(CodeError::RankDeficient);
        }
        Ok(LinearCode {
            field,
            gen,
            n,
            k,
            d_exact: OnceLock::new(),
        })
    }

    /// Reed-Solomon code in the monomial basis: row i of the generator is
    /// (alpha_j^i). MDS with d = n - k + 1.
    pub fn reed_solomon(
        field: Field,
        points: &[FieldElement],
        k: usize,
    ) -> Result<Self, CodeError> {
        let n = points.len();
        if points.iter().any(|p| !field.contains(p)) {
            return Err(CodeError::ForeignElement);
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i] == points[j] {
                    return Err(CodeError::DuplicatePoints);
                }
            }
        }
        if k == 0 || k > n {
            return Err(CodeError::DimensionExceedsLength { k, n });
        }
        let gen = (0..k)
            .map(|i| points.iter().map(|a| field.pow(a, i as u64)).collect())
            .collect();
        Self::from_generator(field, gen)
    }

    /// The [r+1, r, 2] single parity check code: generator [I_r | -1], so
    /// every codeword sums to zero.
    pub fn single_parity_check(field: Field, r: usize) -> Result<Self, CodeError> {
        if r < 1 {
            return Err(CodeError::MalformedGenerator);
        }
        let minus_one = field.neg(&field.one());
        let gen = (0..r)
            .map(|i| {
                let mut row = vec![field.zero(); r + 1];
                row[i] = field.one();
                row[r] = minus_one.clone();
                row
            })
            .collect();
        Self::from_generator(field, gen)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &[Vec<FieldElement>] {
        &self.gen
    }

    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if message.len() != self.k {
            return Err(CodeError::MessageLength {
                got: message.len(),
                want: self.k,
            });
        }
        if message.iter().any(|e| !self.field.contains(e)) {
            return Err(CodeError::ForeignElement);
        }
        let mut out = vec![self.field.zero(); self.n];
        for (m, row) in message.iter().zip(&self.gen) {
            if m.is_zero() {
                continue;
            }
            for (o, g) in out.iter_mut().zip(row) {
                let t = self.field.mul(m, g);
                *o = self.field.add(o, &t);
            }
        }
        Ok(out)
    }

    /// Exact minimum distance by enumerating all q^k - 1 nonzero codewords,
    /// under [`DEFAULT_DISTANCE_BUDGET`]. The result is cached.
    pub fn min_distance_exhaustive(&self) -> Result<usize, CodeError> {
        self.min_distance_exhaustive_with_budget(DEFAULT_DISTANCE_BUDGET)
    }

    /// Exhaustive search with an explicit codeword budget. The message space
    /// is partitioned by leading symbols across parallel workers; the result
    /// does not depend on the partitioning. Worker count defaults to the
    /// machine parallelism, capped by the `GAG_THREADS` environment variable.
    pub fn min_distance_exhaustive_with_budget(&self, budget: u64) -> Result<usize, CodeError> {
        if let Some(&d) = self.d_exact.get() {
            return Ok(d);
        }
        let q = self.field.order();
        let total = (q as u128).pow(self.k as u32);
        if total - 1 > budget as u128 {
            return Err(CodeError::BudgetExceeded {
                needed: total - 1,
                budget,
            });
        }
        let d = if q <= 1024 {
            self.min_distance_indexed(total)
        } else {
            self.min_distance_generic(total)
        };
        Ok(*self.d_exact.get_or_init(|| d))
    }

    /// Table-driven odometer search. Codewords are maintained incrementally:
    /// bumping message digit `pos` from `old` to `old + 1 mod q` adds the
    /// precomputed row (elems[new] - elems[old]) * gen[pos].
    fn min_distance_indexed(&self, total: u128) -> usize {
        let f = &self.field;
        let q = f.order() as usize;
        let elems = f.enumerate();
        let idx_of = |e: &FieldElement| f.index_of(e) as u32;

        let mut add = vec![0u32; q * q];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                add[a * q + b] = idx_of(&f.add(ea, eb));
            }
        }
        // scaled[pos][s][j] = elems[s] * gen[pos][j]
        let scaled: Vec<Vec<Vec<u32>>> = self
            .gen
            .iter()
            .map(|row| {
                elems
                    .iter()
                    .map(|s| row.iter().map(|g| idx_of(&f.mul(s, g))).collect())
                    .collect()
            })
            .collect();
        // delta[pos][old][j] = (elems[(old+1)%q] - elems[old]) * gen[pos][j]
        let delta: Vec<Vec<Vec<u32>>> = self
            .gen
            .iter()
            .map(|row| {
                (0..q)
                    .map(|old| {
                        let step = f.sub(&elems[(old + 1) % q], &elems[old]);
                        row.iter().map(|g| idx_of(&f.mul(&step, g))).collect()
                    })
                    .collect()
            })
            .collect();

        let workers = distance_workers().min((total - 1) as usize).max(1);
        let chunk = (total - 1).div_ceil(workers as u128);
        let k = self.k;
        let n = self.n;

        let search = |start: u128, end: u128| -> usize {
            let mut digits = vec![0usize; k];
            let mut v = start;
            for d in digits.iter_mut() {
                *d = (v % q as u128) as usize;
                v /= q as u128;
            }
            let mut cw = vec![0u32; n];
            for (pos, &dg) in digits.iter().enumerate() {
                if dg != 0 {
                    for (c, &s) in cw.iter_mut().zip(&scaled[pos][dg]) {
                        *c = add[*c as usize * q + s as usize];
                    }
                }
            }
            let mut best = usize::MAX;
            let mut idx = start;
            loop {
                let w = cw.iter().filter(|&&c| c != 0).count();
                if w < best {
                    best = w;
                }
                idx += 1;
                if idx >= end {
                    break;
                }
                let mut pos = 0;
                loop {
                    let old = digits[pos];
                    let new = (old + 1) % q;
                    digits[pos] = new;
                    for (c, &dl) in cw.iter_mut().zip(&delta[pos][old]) {
                        *c = add[*c as usize * q + dl as usize];
                    }
                    if new != 0 {
                        break;
                    }
                    pos += 1;
                }
            }
            best
        };

        if workers == 1 {
            return search(1, total);
        }
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers {
                let start = 1 + w as u128 * chunk;
                let end = (start + chunk).min(total);
                if start >= end {
                    break;
                }
                handles.push(scope.spawn(move || search(start, end)));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("distance worker panicked"))
                .min()
                .unwrap()
        })
    }

    /// Fallback for fields too large for index tables: re-encode every
    /// message. Only reachable for tiny dimensions given the budget.
    fn min_distance_generic(&self, total: u128) -> usize {
        let q = self.field.order() as u128;
        let elems = self.field.enumerate();
        let mut best = usize::MAX;
        for idx in 1..total {
            let mut v = idx;
            let msg: Vec<FieldElement> = (0..self.k)
                .map(|_| {
                    let e = elems[(v % q) as usize].clone();
                    v /= q;
                    e
                })
                .collect();
            let w = weight(&self.encode(&msg).unwrap());
            if w < best {
                best = w;
            }
        }
        best
    }

    /// Certifies d >= claim_w from a parity-check matrix: every column must
    /// be nonzero (w = 2), and additionally no two columns may be dependent
    /// (w = 3). `witness` supplies an upper bound via its encoded weight.
    pub fn distance_bounds(
        &self,
        claim_w: usize,
        witness: Option<&[FieldElement]>,
    ) -> Result<DistanceBounds, CodeError> {
        if claim_w != 2 && claim_w != 3 {
            return Err(CodeError::UnsupportedClaim(claim_w));
        }
        let h = if self.k == self.n {
            Vec::new()
        } else {
            matrix::parity_check(&self.field, &self.gen)
        };
        let column = |j: usize| -> Vec<FieldElement> { h.iter().map(|row| row[j].clone()).collect() };
        for j in 0..self.n {
            if column(j).iter().all(|c| c.is_zero()) {
                return Err(CodeError::CertificationFailed { columns: vec![j] });
            }
        }
        if claim_w == 3 {
            // Columns are dependent iff their normalized forms coincide.
            let normalized: Vec<Vec<FieldElement>> = (0..self.n)
                .map(|j| {
                    let col = column(j);
                    let lead = col.iter().find(|c| !c.is_zero()).unwrap();
                    let inv = self.field.inv(lead).expect("lead is nonzero");
                    col.iter().map(|c| self.field.mul(c, &inv)).collect()
                })
                .collect();
            for i in 0..self.n {
                for j in i + 1..self.n {
                    if normalized[i] == normalized[j] {
                        return Err(CodeError::CertificationFailed {
                            columns: vec![i, j],
                        });
                    }
                }
            }
        }
        let upper = match witness {
            Some(msg) => {
                let w = weight(&self.encode(msg)?);
                if w < claim_w {
                    return Err(CodeError::BadWitness {
                        got: w,
                        bound: claim_w,
                    });
                }
                Some(w)
            }
            None => None,
        };
        Ok(DistanceBounds {
            lower: claim_w,
            upper,
        })
    }

    /// Greedy (hence lexicographically first) information set among the
    /// allowed columns; None when the allowed columns do not span.
    fn greedy_information_set<I: Iterator<Item = usize>>(&self, allowed: I) -> Option<Vec<usize>> {
        let mut basis: Vec<(Vec<FieldElement>, usize)> = Vec::new();
        let mut positions = Vec::new();
        for j in allowed {
            let mut v: Vec<FieldElement> = self.gen.iter().map(|row| row[j].clone()).collect();
            for (bv, piv) in &basis {
                if !v[*piv].is_zero() {
                    let factor = v[*piv].clone();
                    for (x, b) in v.iter_mut().zip(bv) {
                        let t = self.field.mul(&factor, b);
                        *x = self.field.sub(x, &t);
                    }
                }
            }
            if let Some(piv) = v.iter().position(|c| !c.is_zero()) {
                let inv = self.field.inv(&v[piv]).expect("pivot is nonzero");
                let bv: Vec<FieldElement> = v.iter().map(|c| self.field.mul(c, &inv)).collect();
                basis.push((bv, piv));
                positions.push(j);
                if positions.len() == self.k {
                    return Some(positions);
                }
            }
        }
        None
    }

    /// The lexicographically first information set avoiding the given
    /// coordinates, if one exists.
    pub fn information_set_excluding(&self, avoid: &[usize]) -> Option<Vec<usize>> {
        self.greedy_information_set((0..self.n).filter(|j| !avoid.contains(j)))
    }

    /// Recovers the unique message consistent with the unerased symbols,
    /// using the lexicographically first invertible position set. Returns the
    /// message and the k positions used (0-indexed).
    pub fn information_set_recover(
        &self,
        received: &[Option<FieldElement>],
    ) -> Result<(Vec<FieldElement>, Vec<usize>), CodeError> {
        if received.len() != self.n {
            return Err(CodeError::ReceivedLength {
                got: received.len(),
                want: self.n,
            });
        }
        let positions = self
            .greedy_information_set((0..self.n).filter(|&j| received[j].is_some()))
            .ok_or(CodeError::RecoveryImpossible)?;
        // Solve m * G_sub = c over the selected columns.
        let a: Vec<Vec<FieldElement>> = positions
            .iter()
            .map(|&j| self.gen.iter().map(|row| row[j].clone()).collect())
            .collect();
        let b: Vec<FieldElement> = positions
            .iter()
            .map(|&j| received[j].clone().unwrap())
            .collect();
        let message =
            matrix::solve_square(&self.field, &a, &b).expect("information set is invertible");
        Ok((message, positions))
    }
}

fn distance_workers() -> usize {
    let machine = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var(THREADS_ENV) {
        Ok(v) => v.parse::<usize>().ok().filter(|&n| n >= 1).map_or(machine, |n| n.min(machine)),
        Err(_) => machine,
    }
}
