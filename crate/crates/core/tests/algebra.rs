mod common;

use braidbook::braid::{beta_family, BraidWord};
use braidbook::burau::{alexander_polynomial, burau_at_minus1, burau_word, knot_determinant};
use braidbook::laurent::LaurentPoly;
use braidbook::linalg::{det_bareiss, det_cofactor, smith_normal_form, IntMatrix, PolyMatrix};
use braidbook::topology::h1_order;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn int_matrix(size: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-6i64..=6, size * size)
        .prop_map(move |v| IntMatrix::from_fn(size, size, |i, j| BigInt::from(v[i * size + j])))
}

fn poly_matrix(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(), size * size)
        .prop_map(move |v| PolyMatrix::from_fn(size, size, |i, j| v[i * size + j].clone()))
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly()) {
        let ab = &a * &b;
        prop_assert_eq!(ab.eval_at_minus1(), a.eval_at_minus1() * b.eval_at_minus1());
        prop_assert_eq!(ab.eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_minus1(), a.eval_at_minus1() + b.eval_at_minus1());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn symmetric_normal_form_is_canonical(q in nonzero_poly(), k in -5i64..=5, neg in any::<bool>()) {
        // q(t)q(1/t) is symmetric; it is zero at t = 1 only if q is
        let p = &q * &q.mirror();
        prop_assume!(!p.eval_at_one().is_zero());
        let moved = if neg { -(p.shift(k)) } else { p.shift(k) };
        let norm = moved.normalize_symmetric().unwrap();
        prop_assert_eq!(norm.clone(), p.normalize_symmetric().unwrap());
        prop_assert_eq!(norm.mirror(), norm.clone());
        prop_assert!(norm.eval_at_one() > BigInt::zero());
    }

    #[test]
    fn laurent_json_round_trip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), a);
    }

    #[test]
    fn int_det_multiplicative(a in int_matrix(4), b in int_matrix(4)) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(det_bareiss(&a).unwrap(), det_cofactor(&a).unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn poly_det_multiplicative(a in poly_matrix(3), b in poly_matrix(3)) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn poly_bareiss_matches_cofactor(a in poly_matrix(5)) {
        prop_assert_eq!(det_bareiss(&a).unwrap(), det_cofactor(&a).unwrap());
    }

    #[test]
    fn smith_form_certificates(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i64..=9, 16)) {
        let m = IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 4 + j]));
        let snf = smith_normal_form(&m);
        let d = snf.left.mul(&m).unwrap().mul(&snf.right).unwrap();
        for i in 0..rows {
            for j in 0..cols {
                let expect = if i == j && i < snf.diagonal.len() { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d[(i, j)].clone(), expect);
            }
        }
        let unit = |x: BigInt| x == BigInt::one() || x == -BigInt::one();
        prop_assert!(unit(snf.left.det().unwrap()));
        prop_assert!(unit(snf.right.det().unwrap()));
        for pair in snf.diagonal.windows(2) {
            prop_assert!(pair[0].is_zero() && pair[1].is_zero() || !pair[0].is_zero() && (&pair[1] % &pair[0]).is_zero());
        }
        if rows == cols {
            let prod: BigInt = snf.diagonal.iter().product();
            let det = m.det().unwrap();
            prop_assert_eq!(if det < BigInt::zero() { -det } else { det }, prod);
        }
    }

    #[test]
    fn matrix_json_round_trip(a in poly_matrix(2), b in int_matrix(3)) {
        prop_assert_eq!(PolyMatrix::from_json(&a.to_json()).unwrap(), a);
        prop_assert_eq!(IntMatrix::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn burau_inverse_word(w in (2usize..=6).prop_flat_map(|n| word(n, 25))) {
        let b = burau_word(&w);
        prop_assert!(b.mul(&burau_word(&w.inverse())).unwrap().is_identity());
        prop_assert_eq!(b.eval_at_minus1(), burau_at_minus1(&w));
        prop_assert_eq!(burau_at_minus1(&w).det().unwrap(), BigInt::one());
    }
}

#[test]
fn determinants_of_knots_are_odd() {
    let mut r = common::rng(21);
    for case in 0..150 {
        let n = 2 + case % 5;
        let w = common::random_knot_word(&mut r, n, 16);
        let d = knot_determinant(&w).unwrap();
        assert_eq!(&d % 2u32, BigInt::one(), "{w}");
        if n % 2 == 1 {
            assert_eq!(h1_order(&w).unwrap(), d);
        }
    }
}

#[test]
fn swapped_family_indices_share_alexander_polynomials() {
    for n in 1..=7 {
        for m in n + 1..=7 {
            let a = beta_family(n, m).unwrap();
            let b = beta_family(m, n).unwrap();
            if a.is_knot_closure() && b.is_knot_closure() {
                assert_eq!(alexander_polynomial(&a).unwrap(), alexander_polynomial(&b).unwrap(), "({n},{m})");
            }
        }
    }
}

#[test]
fn braid_relations_hold_symbolically() {
    for n in 3..=8usize {
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                let img = |l: Vec<i32>| burau_word(&BraidWord::new(n, l).unwrap());
                if j == i + 1 {
                    assert_eq!(img(vec![i, j, i]), img(vec![j, i, j]));
                }
                if (i - j).abs() >= 2 {
                    assert_eq!(img(vec![i, j]), img(vec![j, i]));
                }
            }
        }
    }
}

#[test]
fn closed_forms_for_small_and_large_n() {
    use braidbook::braid::{delta, delta_rev};
    for n in 3..=21 {
        assert_eq!(burau_at_minus1(&delta(n).unwrap()), common::closed_delta(n), "n={n}");
        assert_eq!(burau_at_minus1(&delta_rev(n).unwrap()), common::closed_delta_rev(n), "n={n}");
    }
}
