//! Reduced Burau representation, its `t = -1` specialization `f_*`, the
//! Alexander polynomial of braid closures and the knot determinant.
//!
//! Convention: `σ_i` acts as the identity except on row `i`, which reads
//! `(t, -t, 1)` in columns `i-1, i, i+1` (entries falling outside the
//! `(n-1)×(n-1)` frame are dropped). At `n = 3, t = -1` this gives
//! `f_*(σ1σ2) = [[0,1],[-1,1]]` and `f_*(σ2σ1) = [[1,1],[-1,0]]`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{IntMatrix, Matrix, PolyMatrix, Scalar};

/// Nontrivial row of a generator image: coefficients on columns `i-1, i, i+1`.
trait GeneratorRow: Scalar {
    fn generator_row(positive: bool) -> [Self; 3];
}

impl GeneratorRow for LaurentPoly {
    fn generator_row(positive: bool) -> [Self; 3] {
        if positive {
            [LaurentPoly::t(), LaurentPoly::monomial(-1, 1), LaurentPoly::one()]
        } else {
            [LaurentPoly::one(), LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1)]
        }
    }
}

impl GeneratorRow for BigInt {
    fn generator_row(positive: bool) -> [Self; 3] {
        let v = |x: i64| BigInt::from(x);
        if positive { [v(-1), v(1), v(1)] } else { [v(1), v(1), v(-1)] }
    }
}

fn check_index(i: usize, strands: usize) -> Result<()> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    if i == 0 || i >= strands {
        return Err(Error::GeneratorOutOfRange { index: i, max: strands - 1 });
    }
    Ok(())
}

fn generator_matrix<R: GeneratorRow>(i: usize, positive: bool, strands: usize) -> Result<Matrix<R>> {
    check_index(i, strands)?;
    let dim = strands - 1;
    let r = i - 1;
    let [left, mid, right] = R::generator_row(positive);
    let mut m = Matrix::identity(dim);
    if r >= 1 {
        m[(r, r - 1)] = left;
    }
    m[(r, r)] = mid;
    if r + 1 < dim {
        m[(r, r + 1)] = right;
    }
    Ok(m)
}

/// In-place right multiplication by the image of one letter. Only the
/// columns around the letter's index change.
fn right_multiply<R: GeneratorRow>(m: &mut Matrix<R>, letter: i32) {
    let dim = m.cols();
    let r = letter.unsigned_abs() as usize - 1;
    let [left, mid, right] = R::generator_row(letter > 0);
    for row in 0..m.rows() {
        let x = m[(row, r)].clone();
        if x.is_zero() {
            continue;
        }
        if r >= 1 {
            m[(row, r - 1)] = m[(row, r - 1)].add(&x.mul(&left));
        }
        if r + 1 < dim {
            m[(row, r + 1)] = m[(row, r + 1)].add(&x.mul(&right));
        }
        m[(row, r)] = x.mul(&mid);
    }
}

fn word_image<R: GeneratorRow>(w: &BraidWord) -> Matrix<R> {
    let mut m = Matrix::identity(w.strands() - 1);
    for &e in w.letters() {
        right_multiply(&mut m, e);
    }
    m
}

/// Image of `σ_i^{±1}` in `GL_{n-1}(ℤ[t, t⁻¹])`.
pub fn burau_generator(i: usize, positive: bool, strands: usize) -> Result<PolyMatrix> {
    generator_matrix(i, positive, strands)
}

/// Image of `σ_i^{±1}` under `f_*`.
pub fn burau_generator_at_minus1(i: usize, positive: bool, strands: usize) -> Result<IntMatrix> {
    generator_matrix(i, positive, strands)
}

/// Ordered product of generator images; the empty word maps to the identity.
pub fn burau_word(w: &BraidWord) -> PolyMatrix {
    word_image(w)
}

/// `f_*(w)`: the representation specialized at `t = -1`, computed directly
/// over the integers.
pub fn burau_at_minus1(w: &BraidWord) -> IntMatrix {
    word_image(w)
}

/// `det(I - B(w))` over `ℤ[t, t⁻¹]`.
pub fn burau_char_det(w: &BraidWord) -> Result<LaurentPoly> {
    let b = burau_word(w);
    PolyMatrix::identity(b.rows()).sub(&b)?.det()
}

fn require_knot(w: &BraidWord) -> Result<()> {
    match w.closure_component_count() {
        1 => Ok(()),
        c => Err(Error::NotAKnot(c)),
    }
}

/// Alexander polynomial of the closure, normalized symmetric with `Δ(1) = 1`.
/// Obtained as `det(I - B(w)) / (1 + t + ⋯ + t^{n-1})`.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPoly> {
    require_knot(w)?;
    let num = burau_char_det(w)?;
    num.divide_exact(&LaurentPoly::geometric(w.strands()))?.normalize_symmetric()
}

/// `|det(I - f_*(w))|`. Equals the knot determinant only for odd `n`; for
/// even `n` the factor `1 + t + ⋯ + t^{n-1}` vanishes at `t = -1`.
pub fn direct_determinant(w: &BraidWord) -> Result<BigInt> {
    let f = burau_at_minus1(w);
    Ok(IntMatrix::identity(f.rows()).sub(&f)?.det()?.abs())
}

/// `|Δ_K(-1)|` for the closure `K` of `w`.
pub fn knot_determinant(w: &BraidWord) -> Result<BigInt> {
    require_knot(w)?;
    if w.strands() % 2 == 1 {
        direct_determinant(w)
    } else {
        Ok(alexander_polynomial(w)?.eval_at_minus1().abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{beta_family, delta, delta_rev};

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn generator_images() {
        let g = burau_generator(1, true, 3).unwrap().eval_at_minus1();
        assert_eq!(g, int(&[&[1, 1], &[0, 1]]));
        for n in 2..7 {
            for i in 1..n {
                let p = burau_generator(i, true, n).unwrap();
                let q = burau_generator(i, false, n).unwrap();
                assert!(p.mul(&q).unwrap().is_identity());
                assert!(q.mul(&p).unwrap().is_identity());
                let pm = burau_generator_at_minus1(i, true, n).unwrap();
                assert_eq!(pm, p.eval_at_minus1());
                let qm = burau_generator_at_minus1(i, false, n).unwrap();
                assert_eq!(qm, q.eval_at_minus1());
            }
        }
        assert!(burau_generator(3, true, 3).is_err());
        assert!(burau_generator(0, true, 3).is_err());
    }

    #[test]
    fn three_strand_anchors() {
        assert!(burau_word(&w(4, &[])).is_identity());
        assert_eq!(burau_word(&delta(3).unwrap()).eval_at_minus1(), int(&[&[0, 1], &[-1, 1]]));
        assert_eq!(burau_word(&delta_rev(3).unwrap()).eval_at_minus1(), int(&[&[1, 1], &[-1, 0]]));
        assert_eq!(burau_at_minus1(&delta(3).unwrap()), int(&[&[0, 1], &[-1, 1]]));
    }

    #[test]
    fn five_strand_closed_forms() {
        let d = burau_at_minus1(&delta(5).unwrap());
        assert_eq!(d, int(&[&[0, 0, 0, 1], &[-1, 0, 0, 1], &[0, -1, 0, 1], &[0, 0, -1, 1]]));
        let dr = burau_at_minus1(&delta_rev(5).unwrap());
        assert_eq!(dr, int(&[&[1, 1, 0, 0], &[-1, 0, 1, 0], &[1, 0, 0, 1], &[-1, 0, 0, 0]]));
    }

    #[test]
    fn mixed_signs_agree_with_symbolic_route() {
        let b = w(5, &[1, -2, 3, -4, -1, 2, 2, -3, 4, 1]);
        assert_eq!(burau_at_minus1(&b), burau_word(&b).eval_at_minus1());
        assert!(burau_word(&b.compose(&b.inverse()).unwrap()).is_identity());
    }

    #[test]
    fn unknot_and_trefoil() {
        for n in 2..7 {
            assert!(alexander_polynomial(&delta(n).unwrap()).unwrap().is_one());
        }
        let trefoil = w(3, &[1, 2, 1, 2]);
        let expect = LaurentPoly::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(alexander_polynomial(&trefoil).unwrap(), expect);
        assert_eq!(knot_determinant(&trefoil).unwrap(), BigInt::from(3));
        // det(I - [[-1,1],[-1,0]]) = det([[2,-1],[1,1]])
        assert_eq!(
            burau_at_minus1(&trefoil),
            int(&[&[-1, 1], &[-1, 0]])
        );
    }

    #[test]
    fn even_strand_determinant_uses_alexander_route() {
        // σ1³ in B_2 closes to the trefoil
        let trefoil2 = w(2, &[1, 1, 1]);
        assert_eq!(knot_determinant(&trefoil2).unwrap(), BigInt::from(3));
        assert_eq!(direct_determinant(&trefoil2).unwrap(), BigInt::from(0));
        let stabilized = w(3, &[1, 2, 1, 2]).markov_stabilize(true);
        assert_eq!(knot_determinant(&stabilized).unwrap(), BigInt::from(3));
    }

    #[test]
    fn requires_knot_closure() {
        assert_eq!(knot_determinant(&w(3, &[])), Err(Error::NotAKnot(3)));
        assert!(alexander_polynomial(&w(3, &[1])).is_err());
    }

    #[test]
    fn family_determinants() {
        // (δδ^Δ)²δ in B_3 maps to [[0,1],[-1,5]], so det(I - f) = -3
        assert_eq!(knot_determinant(&beta_family(3, 3).unwrap()).unwrap(), BigInt::from(3));
        assert_eq!(knot_determinant(&beta_family(3, 5).unwrap()).unwrap(), BigInt::from(7));
        assert_eq!(knot_determinant(&beta_family(5, 3).unwrap()).unwrap(), BigInt::from(7));
        assert_eq!(knot_determinant(&beta_family(5, 7).unwrap()).unwrap(), BigInt::from(23));
        let a = alexander_polynomial(&beta_family(3, 5).unwrap()).unwrap();
        assert_eq!(a.eval_at_minus1().abs(), BigInt::from(7));
        assert_eq!(a, alexander_polynomial(&beta_family(5, 3).unwrap()).unwrap());
    }
}
