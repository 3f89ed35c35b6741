#![allow(dead_code)]

use braidbook::braid::BraidWord;
use braidbook::laurent::LaurentPoly;
use braidbook::linalg::IntMatrix;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letters(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    BraidWord::new(n, random_letters(rng, n, max_len)).unwrap()
}

/// Rejection-samples words whose closure is a knot.
pub fn random_knot_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    loop {
        let w = random_word(rng, n, max_len);
        if w.is_knot_closure() {
            return w;
        }
    }
}

fn int_matrix(size: usize, f: impl Fn(usize, usize) -> i64) -> IntMatrix {
    IntMatrix::from_fn(size, size, |i, j| BigInt::from(f(i, j)))
}

/// f(δ): top row (0,…,0,1), `-I` below-left, last column all ones.
pub fn closed_delta(n: usize) -> IntMatrix {
    let s = n - 1;
    int_matrix(s, |i, j| {
        if j == s - 1 {
            1
        } else if i >= 1 && j == i - 1 {
            -1
        } else {
            0
        }
    })
}

/// f(δ^Δ): first column alternating 1, -1, …; `I` above-right, last row
/// otherwise zero.
pub fn closed_delta_rev(n: usize) -> IntMatrix {
    let s = n - 1;
    int_matrix(s, |i, j| {
        if j == 0 {
            if i % 2 == 0 { 1 } else { -1 }
        } else if i + 1 == j {
            1
        } else {
            0
        }
    })
}

/// f(δ δ^Δ)² for odd n: first column (1, 4, 0, 4, …, 0, 4), identity elsewhere.
pub fn closed_square(n: usize) -> IntMatrix {
    let s = n - 1;
    int_matrix(s, |i, j| {
        if j == 0 && i >= 1 {
            if i % 2 == 1 { 4 } else { 0 }
        } else if i == j {
            1
        } else {
            0
        }
    })
}

/// f(δ δ^Δ)^{2l} f(δ) for odd n: like f(δ) but the last column alternates
/// 4l+1 and 1 below the top row.
pub fn closed_power(n: usize, l: i64) -> IntMatrix {
    let s = n - 1;
    int_matrix(s, |i, j| {
        if j == s - 1 {
            if i % 2 == 1 { 4 * l + 1 } else { 1 }
        } else if i >= 1 && j == i - 1 {
            -1
        } else {
            0
        }
    })
}

/// Dense polynomial product on coefficient vectors, lowest degree first.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let len = a.len().max(b.len());
    (0..len).map(|i| a.get(i).unwrap_or(&0) - b.get(i).unwrap_or(&0)).collect()
}

/// Alexander polynomial from a 2×2 Seifert matrix via det(V - t Vᵀ),
/// shifted to be symmetric and signed positive at t = 1.
pub fn seifert_alexander_2x2(v: [[i64; 2]; 2]) -> LaurentPoly {
    // entry (i, j) of V - tVᵀ is v[i][j] - t v[j][i]
    let e = |i: usize, j: usize| vec![v[i][j], -v[j][i]];
    let det = poly_sub(&poly_mul(&e(0, 0), &e(1, 1)), &poly_mul(&e(0, 1), &e(1, 0)));
    let low = det.iter().position(|&c| c != 0).unwrap();
    let high = det.iter().rposition(|&c| c != 0).unwrap();
    assert_eq!((high - low) % 2, 0);
    let center = ((low + high) / 2) as i64;
    let sign = if det.iter().sum::<i64>() < 0 { -1 } else { 1 };
    LaurentPoly::from_terms(
        det.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (k as i64 - center, sign * c)),
    )
}
