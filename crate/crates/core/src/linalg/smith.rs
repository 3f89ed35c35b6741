use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal `d_1 | d_2 | …`, nonnegative, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row transform.
    pub left: IntMatrix,
    /// Unimodular column transform.
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nontrivial invariant factors of the cokernel, with `0` for each ℤ summand.
    pub fn cokernel_factors(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> =
            self.diagonal.iter().filter(|d| *d != &BigInt::from(1)).cloned().collect();
        let rows = self.left.rows();
        out.extend(std::iter::repeat_n(BigInt::zero(), rows.saturating_sub(self.diagonal.len())));
        out
    }
}

/// Smith normal form with transforms: `left · m · right = diag(d)`.
/// Pivots are the smallest nonzero entry by absolute value, scanning
/// rows then columns.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                return finish(a, left, right);
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    add_row_multiple(&mut a, i, t, &-&q);
                    add_row_multiple(&mut left, i, t, &-&q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    add_col_multiple(&mut a, j, t, &-&q);
                    add_col_multiple(&mut right, j, t, &-&q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold a row holding a non-multiple into row t
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    add_row_multiple(&mut a, t, i, &BigInt::from(1));
                    add_row_multiple(&mut left, t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
    }
    finish(a, left, right)
}

fn finish(a: IntMatrix, left: IntMatrix, right: IntMatrix) -> SmithForm {
    let diagonal = (0..a.rows().min(a.cols())).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left, right }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// row[dst] += c · row[src]
fn add_row_multiple(a: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for j in 0..a.cols() {
        let delta = &a[(src, j)] * c;
        a[(dst, j)] += delta;
    }
}

/// col[dst] += c · col[src]
fn add_col_multiple(a: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for i in 0..a.rows() {
        let delta = &a[(i, src)] * c;
        a[(i, dst)] += delta;
    }
}

fn negate_row(a: &mut IntMatrix, i: usize) {
    for j in 0..a.cols() {
        a[(i, j)] = -&a[(i, j)];
    }
}
