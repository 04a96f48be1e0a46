//! Dense exact linear algebra over the rationals: echelon forms, rank, kernels,
//! row spaces and coordinate solves.

use crate::error::{Error, Result};
use crate::rational::Q;
use num::{One, Zero};

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn ncols(m: &Matrix) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = ncols(m);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = ncols(b);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn scale(v: &[Q], k: &Q) -> Vec<Q> {
    v.iter().map(|x| x * k).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|r| is_zero_vec(r))
}

/// Reduced row echelon form together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = ncols(&a);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : m v = 0}`, one vector per free column.
pub fn null_space(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    if m.is_empty() {
        return (0..cols)
            .map(|j| {
                let mut v = vec![Q::zero(); cols];
                v[j] = Q::one();
                v
            })
            .collect();
    }
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the row space: the nonzero rows of the reduced echelon form.
pub fn row_space(m: &Matrix) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m);
    r.into_iter().take(pivots.len()).collect()
}

/// Solve `sum_k c_k basis[k] = v`. Returns `None` when `v` is outside the span.
/// The basis must be linearly independent for the coefficients to be unique.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let k = basis.len();
    let dim = v.len();
    // augmented system: columns are the basis vectors, last column is v
    let aug: Matrix = (0..dim)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Q::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        c[p] = r[i][k].clone();
    }
    Some(c)
}

/// True when `a` and `b` span the same subspace.
pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = rank(&a.to_vec());
    let rb = rank(&b.to_vec());
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && rank(&both) == ra
}

/// Returns `k` with `w = k v`, if any. A zero `v` only matches a zero `w`.
pub fn scalar_multiple(v: &[Q], w: &[Q]) -> Option<Q> {
    let Some(i) = v.iter().position(|x| !x.is_zero()) else {
        return is_zero_vec(w).then(Q::zero);
    };
    let k = &w[i] / &v[i];
    v.iter()
        .zip(w)
        .all(|(x, y)| &(x * &k) == y)
        .then_some(k)
}

pub fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, from_ints, q};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| from_ints(r)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(rank(&zeros(3, 3)), 0);
        assert_eq!(rank(&identity(4)), 4);
    }

    #[test]
    fn null_space_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = null_space(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&mat_vec(&a, v)));
        }
    }

    #[test]
    fn coordinates_recover_combination() {
        let basis = vec![from_ints(&[1, 1, 0]), from_ints(&[0, 1, 1])];
        let v = from_ints(&[2, 5, 3]);
        assert_eq!(coordinates(&basis, &v).unwrap(), vec![q(2), q(3)]);
        assert!(coordinates(&basis, &from_ints(&[1, 0, 0])).is_none());
    }

    #[test]
    fn scalar_multiple_detection() {
        let v = from_ints(&[2, 0, -4]);
        assert_eq!(scalar_multiple(&v, &from_ints(&[1, 0, -2])), Some(frac(1, 2)));
        assert_eq!(scalar_multiple(&v, &from_ints(&[1, 1, -2])), None);
        assert_eq!(scalar_multiple(&from_ints(&[0, 0]), &from_ints(&[0, 0])), Some(q(0)));
    }
}
