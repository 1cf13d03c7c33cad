//! Small dense linear algebra over a [`Field`]: row reduction, rank, square
//! solves and the parity-check matrix of a generator. Internal to the crate.

use crate::field::{Field, FieldElement};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped) and
/// the pivot column of each surviving row, in order.
pub(crate) fn rref(
    field: &Field,
    rows: &[Vec<FieldElement>],
) -> (Vec<Vec<FieldElement>>, Vec<usize>) {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        let inv = field.inv(&m[r][col]).expect("pivot is nonzero");
        for c in col..ncols {
            m[r][c] = field.mul(&m[r][c], &inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for c in col..ncols {
                    let t = field.mul(&factor, &m[r][c]);
                    m[i][c] = field.sub(&m[i][c], &t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn rank(field: &Field, rows: &[Vec<FieldElement>]) -> usize {
    rref(field, rows).1.len()
}

/// (k x m) times (m x n).
pub(crate) fn mat_mul(
    field: &Field,
    a: &[Vec<FieldElement>],
    b: &[Vec<FieldElement>],
) -> Vec<Vec<FieldElement>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![field.zero(); n];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    let t = field.mul(x, y);
                    *o = field.add(o, &t);
                }
            }
            out
        })
        .collect()
}

/// Solves the square system A x = b by Gaussian elimination. None when A is
/// singular.
pub(crate) fn solve_square(
    field: &Field,
    a: &[Vec<FieldElement>],
    b: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let n = a.len();
    let mut m: Vec<Vec<FieldElement>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot_row);
        let inv = field.inv(&m[col][col]).expect("pivot is nonzero");
        for c in col..=n {
            m[col][c] = field.mul(&m[col][c], &inv);
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for c in col..=n {
                    let t = field.mul(&factor, &m[col][c]);
                    m[i][c] = field.sub(&m[i][c], &t);
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[row.len() - 1].clone()).collect())
}

/// A parity-check matrix ((n-k) rows) for the row space of a full-rank
/// generator: row reduce G, then for every non-pivot column j emit the vector
/// with 1 at j and -R[i][j] at each pivot column. Column indices refer to the
/// original coordinates throughout.
pub(crate) fn parity_check(field: &Field, gen: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let n = gen.first().map_or(0, |r| r.len());
    let (reduced, pivots) = rref(field, gen);
    assert_eq!(reduced.len(), gen.len(), "generator must have full row rank");
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut h = Vec::with_capacity(n - pivots.len());
    for j in 0..n {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut row = vec![field.zero(); n];
        row[j] = field.one();
        for (i, &pc) in pivots.iter().enumerate() {
            row[pc] = field.neg(&reduced[i][j]);
        }
        h.push(row);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Field {
        Field::new(3, 1).unwrap()
    }

    fn rows3(rows: &[&[u64]]) -> Vec<Vec<FieldElement>> {
        let f = gf3();
        rows.iter()
            .map(|r| r.iter().map(|&c| f.element(vec![c])).collect())
            .collect()
    }

    #[test]
    fn rank_of_vandermonde() {
        let m = rows3(&[&[1, 1, 1], &[0, 1, 2]]);
        assert_eq!(rank(&gf3(), &m), 2);
        let singular = rows3(&[&[1, 2, 0], &[2, 4 % 3, 0]]);
        assert_eq!(rank(&gf3(), &singular), 1);
    }

    #[test]
    fn solve_2x2() {
        // x + y = 2, y + 2z... keep it square: [[1,1],[1,2]] x = [2, 0]
        let f = gf3();
        let a = rows3(&[&[1, 1], &[1, 2]]);
        let b = vec![f.from_index(2), f.from_index(0)];
        let x = solve_square(&f, &a, &b).unwrap();
        // check A x = b
        for (row, rhs) in a.iter().zip(&b) {
            let mut acc = f.zero();
            for (c, xi) in row.iter().zip(&x) {
                acc = f.add(&acc, &f.mul(c, xi));
            }
            assert_eq!(&acc, rhs);
        }
    }

    #[test]
    fn parity_check_annihilates_generator() {
        let gen = rows3(&[&[1, 1, 1], &[0, 1, 2]]);
        let f = gf3();
        let h = parity_check(&f, &gen);
        assert_eq!(h.len(), 1);
        for grow in &gen {
            for hrow in &h {
                let mut acc = f.zero();
                for (a, b) in grow.iter().zip(hrow) {
                    acc = f.add(&acc, &f.mul(a, b));
                }
                assert!(acc.is_zero());
            }
        }
    }
}
