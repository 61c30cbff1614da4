use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// Each row scaled by the lcm of its denominators, with the scale factors.
fn clear_row_denominators(m: &RationalMatrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let ints = row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            (ints, lcm)
        })
        .unzip()
}

/// Exact inverse by Gauss-Jordan elimination on `[M | I]`.
///
/// The rows of `M` are first cleared of denominators and the elimination
/// runs fraction-free: after step `k` every entry is an integer and each
/// division by the previous pivot is exact. The pivot is the first nonzero
/// entry at or below the diagonal in each column. Labels of the result are
/// the transposed labels of `m`.
pub fn gauss_jordan_inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::shape("inverse", m.shape(), (m.cols(), m.rows())));
    }
    let n = m.rows();
    let (rows, scale) = clear_row_denominators(m);
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(Error::Singular { column: k })?;
        a.swap(k, pivot);
        let pivot_row = a[k].clone();
        let p = &pivot_row[k];
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = std::mem::take(&mut row[k]);
            // Columns left of k hold only the diagonal; everything else
            // there is already zero.
            if i < k {
                row[i] = exact_div(p * &row[i], &prev);
            }
            for j in k + 1..2 * n {
                let v = p * &row[j] - &factor * &pivot_row[j];
                row[j] = exact_div(v, &prev);
            }
        }
        prev = pivot_row[k].clone();
    }

    // Left block is now prev * I, so M_int^{-1} = right block / prev and
    // M^{-1} = M_int^{-1} diag(scale).
    let inv = RationalMatrix::from_fn(n, n, |i, j| {
        BigRational::new(&a[i][n + j] * &scale[j], prev.clone())
    });
    inv.with_labels(m.col_labels().to_vec(), m.row_labels().to_vec())
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "fraction-free step left a remainder");
    q
}

/// Fraction-free (Bareiss) determinant of an integer matrix. Every
/// intermediate value is an integer and each division is exact.
pub fn bareiss_integer(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant. Rational input is cleared of denominators row by row
/// and then run through [`bareiss_integer`].
pub fn bareiss_determinant(m: &RationalMatrix) -> Result<BigRational> {
    if !m.is_square() {
        return Err(Error::shape("determinant", m.shape(), (m.cols(), m.rows())));
    }
    let (rows, scale) = clear_row_denominators(m);
    let scale = scale.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(BigRational::new(bareiss_integer(rows), scale))
}

/// Rank by row reduction.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * pv;
            }
        }
        rank += 1;
    }
    rank
}
