use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Largest size for which polynomial determinants use cofactor expansion.
pub const COFACTOR_THRESHOLD: usize = 4;

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
/// of the input, so each division by the previous pivot is exact.
pub fn det_bareiss<R: Scalar>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(R::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let mut x = a[(i, j)].mul(&pivot);
                if !lead.is_zero() && !a[(k, j)].is_zero() {
                    x = x.sub(&lead.mul(&a[(k, j)]));
                }
                a[(i, j)] = x.divide_exact(&prev)?;
            }
            a[(i, k)] = R::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Laplace expansion along the first row.
pub fn det_cofactor<R: Scalar>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let cols: Vec<usize> = (0..m.cols()).collect();
    Ok(expand(m, 0, &cols))
}

fn expand<R: Scalar>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    match cols {
        [] => R::one(),
        [c] => m[(row, *c)].clone(),
        _ => {
            let mut acc = R::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let x = &m[(row, c)];
                if x.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let term = x.mul(&expand(m, row + 1, &rest));
                acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}
