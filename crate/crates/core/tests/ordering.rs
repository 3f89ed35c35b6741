mod common;

use std::cmp::Ordering;

use braidbook::braid::{delta, full_twist, BraidWord};
use braidbook::burau::burau_word;
use braidbook::ordering::{
    compare_dehornoy, dehornoy_floor, fdtc, fdtc_with, handle_reduce, sigma_class, FdtcOptions, Rational,
    SigmaClass, DEFAULT_STEP_LIMIT,
};
use proptest::prelude::*;

const LIMIT: usize = DEFAULT_STEP_LIMIT;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn any_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(move |n| word(n, max_len))
}

proptest! {
    #[test]
    fn trichotomy_and_inverse(w in any_word(16)) {
        let c = sigma_class(&w, LIMIT).unwrap();
        prop_assert_eq!(sigma_class(&w.inverse(), LIMIT).unwrap(), c.opposite());
    }

    #[test]
    fn reduction_preserves_the_element(w in any_word(16)) {
        let (reduced, class) = handle_reduce(&w, LIMIT).unwrap();
        prop_assert_eq!(burau_word(&reduced), burau_word(&w));
        // the main generator appears with one sign only
        if let SigmaClass::SigmaPositive(i) | SigmaClass::SigmaNegative(i) = class {
            let lowest: Vec<i32> = reduced.letters().iter().copied().filter(|e| e.unsigned_abs() as usize == i).collect();
            let positive = matches!(class, SigmaClass::SigmaPositive(_));
            prop_assert!(lowest.iter().all(|&e| (e > 0) == positive));
            prop_assert!(reduced.letters().iter().all(|e| e.unsigned_abs() as usize >= i));
        } else {
            prop_assert!(reduced.is_empty());
        }
    }

    #[test]
    fn order_is_left_invariant_and_antisymmetric(
        (a, b, c) in (2usize..=4).prop_flat_map(|n| (word(n, 8), word(n, 8), word(n, 8)))
    ) {
        let ab = compare_dehornoy(&a, &b, LIMIT).unwrap();
        prop_assert_eq!(compare_dehornoy(&b, &a, LIMIT).unwrap(), ab.reverse());
        let ca = c.compose(&a).unwrap();
        let cb = c.compose(&b).unwrap();
        prop_assert_eq!(compare_dehornoy(&ca, &cb, LIMIT).unwrap(), ab);
    }

    #[test]
    fn positive_words_have_nonnegative_floor(w in (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(1..n as i32, 0..=15).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })) {
        prop_assert!(dehornoy_floor(&w, LIMIT).unwrap() >= 0);
        prop_assert!(compare_dehornoy(&BraidWord::identity(w.strands()).unwrap(), &w, LIMIT).unwrap() != Ordering::Greater);
    }

    #[test]
    fn floor_sandwich(w in any_word(10)) {
        let n = w.strands();
        let f = dehornoy_floor(&w, LIMIT).unwrap();
        let twist = full_twist(n).unwrap();
        prop_assert_ne!(compare_dehornoy(&twist.pow(f), &w, LIMIT).unwrap(), Ordering::Greater);
        prop_assert_eq!(compare_dehornoy(&w, &twist.pow(f + 1), LIMIT).unwrap(), Ordering::Less);
    }

    #[test]
    fn estimates_contain_known_values(a in -2i64..=2, b in 0i64..6, n in 2usize..=5) {
        // ω(Δ^{2a} δ^b) = a + b/n
        let w = full_twist(n).unwrap().pow(a).compose(&delta(n).unwrap().pow(b)).unwrap();
        let est = fdtc(&w, 6, None).unwrap();
        let value = Rational::new(a * n as i64 + b, n as i64);
        prop_assert!(est.contains(value));
        prop_assert!(est.lower <= est.upper);
    }

    #[test]
    fn higher_powers_refine(w in (3usize..=4).prop_flat_map(|n| word(n, 6)), extra in 1u32..3) {
        let opts = |p: u32| FdtcOptions { max_power: p, use_conjugates: false, ..FdtcOptions::default() };
        let coarse = fdtc_with(&w, &opts(2)).unwrap();
        let fine = fdtc_with(&w, &opts(2 + extra)).unwrap();
        prop_assert!(coarse.lower <= fine.lower && fine.upper <= coarse.upper);
        if let Some(p) = fine.pinned {
            prop_assert!(fine.contains(p));
        }
    }
}

#[test]
fn handle_reduction_matches_b3_faithfulness_oracle() {
    let mut r = common::rng(31);
    for _ in 0..500 {
        let w = common::random_word(&mut r, 3, 16);
        let trivial = sigma_class(&w, LIMIT).unwrap() == SigmaClass::Trivial;
        assert_eq!(trivial, burau_word(&w).is_identity(), "{w}");
    }
}

#[test]
fn floor_translation_and_defect() {
    let mut r = common::rng(32);
    for case in 0..200 {
        let n = 3 + case % 2;
        let a = common::random_word(&mut r, n, 10);
        let b = common::random_word(&mut r, n, 10);
        let m = (case % 5) as i64 - 2;
        let fa = dehornoy_floor(&a, LIMIT).unwrap();
        let shifted = full_twist(n).unwrap().pow(m).compose(&a).unwrap();
        assert_eq!(dehornoy_floor(&shifted, LIMIT).unwrap(), fa + m, "{a}, m={m}");
        let fb = dehornoy_floor(&b, LIMIT).unwrap();
        let fab = dehornoy_floor(&a.compose(&b).unwrap(), LIMIT).unwrap();
        assert!((fab - fa - fb).abs() <= 1, "{a} | {b}");
    }
}
