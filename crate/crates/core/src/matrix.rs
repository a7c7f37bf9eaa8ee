//! Dense matrices over [`Scalar`]. Inverses use fraction-free elimination.

use crate::error::{Error, Result};
use crate::qscalar::{Poly, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Least common multiple of the denominators in `row`, as a polynomial.
fn row_denominator(row: &[Scalar]) -> Scalar {
    let mut l = Poly::one();
    for x in row {
        let d = x.denominator_poly();
        if d.is_one() {
            continue;
        }
        let g = l.gcd(d);
        l = l.mul(&d.exact_div(&g));
    }
    Scalar::from_poly(l)
}

/// Scale every row to Laurent-polynomial entries; returns the scaled matrix
/// and the per-row factors.
fn clear_denominators(m: &Matrix) -> (Matrix, Vec<Scalar>) {
    let factors: Vec<Scalar> = m.iter().map(|row| row_denominator(row)).collect();
    let scaled = m
        .iter()
        .zip(&factors)
        .map(|(row, f)| row.iter().map(|x| x * f).collect())
        .collect();
    (scaled, factors)
}

/// Fraction-free Gauss-Jordan on the augmented matrix `[m | rhs]`, pivoting on
/// the first nonzero entry of each column. On success the left block becomes
/// `det * I` (up to the sign of the row swaps) and the returned scalar is that
/// diagonal value.
fn bareiss_jordan(m: &mut Matrix, width: usize) -> Option<(Scalar, bool)> {
    let n = m.len();
    let mut prev = Scalar::one();
    let mut swapped = false;
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        if p != k {
            m.swap(p, k);
            swapped = !swapped;
        }
        let pivot = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let v = &(&pivot * &m[i][j]) - &(&factor * &m[k][j]);
                m[i][j] = v.div_exact(&prev);
            }
            m[i][k] = Scalar::zero();
        }
        // rows above k were updated with the same formula; row k itself is
        // left as is, which keeps every diagonal entry equal to the current
        // leading minor after the final step
        prev = pivot;
    }
    Some((prev, swapped))
}

/// Gaussian elimination over the field of rational functions. Zero entries
/// below a pivot are skipped, so sparse (e.g. diagonal) matrices cost only the
/// product of their pivots.
pub fn determinant(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let inv = a[k][k].recip().expect("pivot is nonzero");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    a[i][j] = &a[i][j] - &(&f * &a[k][j]);
                }
            }
            a[i][k] = Scalar::zero();
        }
        det = &det * &a[k][k];
    }
    det
}

/// Exact inverse; [`Error::SingularMatrix`] when the determinant vanishes.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let (scaled, factors) = clear_denominators(m);
    let mut aug: Matrix = scaled
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    bareiss_jordan(&mut aug, 2 * n).ok_or(Error::SingularMatrix)?;
    // row i reads diag_i * x_i = rhs_i; P^{-1} = rows / diag, A^{-1} = P^{-1} D
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        let diag = aug[i][i].clone();
        for j in 0..n {
            out[i][j] = &(&aug[i][n + j] * &factors[j]) / &diag;
        }
    }
    Ok(out)
}
