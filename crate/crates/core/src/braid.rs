//! Braid words over the Artin generators and the structural queries on them.
//!
//! A letter `e` stands for `σ_e` when positive and `σ_{|e|}⁻¹` when negative.
//! Words are plain values: composition concatenates, reduction is explicit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = i32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
/// Braid groups start at `B_1`, the trivial group, so that `β_{1,m}` and
/// one-strand closures make sense.
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::TooFewStrands(strands));
        }
        for &e in &letters {
            let i = e.unsigned_abs() as usize;
            if e == 0 || i >= strands {
                return Err(Error::GeneratorOutOfRange { index: i, max: strands - 1 });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// Letters are assumed valid; used internally where they are by construction.
    pub(crate) fn from_parts(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(strands >= 1);
        debug_assert!(letters.iter().all(|&e| e != 0 && (e.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts(self.strands, letters))
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&e| -e).collect();
        BraidWord::from_parts(self.strands, letters)
    }

    /// `k`-th power; negative `k` powers the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_parts(self.strands, letters)
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord::from_parts(self.strands, letters)
    }

    /// Conjugation by the half twist: σ_i ↦ σ_{n-i}.
    pub fn flip(&self) -> BraidWord {
        let n = self.strands as Letter;
        let letters = self.letters.iter().map(|&e| e.signum() * (n - e.abs())).collect();
        BraidWord::from_parts(self.strands, letters)
    }

    /// Deletes adjacent pairs `e, -e` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        BraidWord::from_parts(self.strands, out)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &e in &self.letters {
            p = p.then_transposition(e.unsigned_abs() as usize);
        }
        p
    }

    /// Number of components of the closure; 1 means a knot.
    pub fn closure_component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot_closure(&self) -> bool {
        self.closure_component_count() == 1
    }

    /// The same word viewed in `B_strands` for `strands` at least the current count.
    pub fn embed(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandMismatch(self.strands, strands));
        }
        Ok(BraidWord::from_parts(strands, self.letters.clone()))
    }

    /// Appends `σ_n^{sign}` and passes to `n + 1` strands.
    pub fn markov_stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as Letter;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord::from_parts(self.strands + 1, letters)
    }

    /// Syntactic destabilization: succeeds when exactly one letter uses the
    /// top generator `σ_{n-1}`. The word is rotated so that letter is last,
    /// then it is dropped and the strand count lowered. `None` otherwise.
    pub fn markov_destabilize(&self) -> Option<BraidWord> {
        if self.strands < 2 {
            return None;
        }
        let top = (self.strands - 1) as Letter;
        let mut hits = self.letters.iter().enumerate().filter(|(_, e)| e.abs() == top);
        let (pos, _) = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        let mut letters = Vec::with_capacity(self.len() - 1);
        letters.extend_from_slice(&self.letters[pos + 1..]);
        letters.extend_from_slice(&self.letters[..pos]);
        Some(BraidWord::from_parts(self.strands - 1, letters))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&e| if e > 0 { format!("s{e}") } else { format!("s{}^-1", -e) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn delta(n: usize) -> Result<BraidWord> {
    BraidWord::new(n, (1..n as Letter).collect())
}

/// `σ_{n-1} ⋯ σ_2 σ_1`.
pub fn delta_rev(n: usize) -> Result<BraidWord> {
    BraidWord::new(n, (1..n as Letter).rev().collect())
}

/// The full twist `Δ² = δⁿ`, central in `B_n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    Ok(delta(n)?.pow(n as i64))
}

/// `β_{n,m} = (δ δ^Δ)^{m-1} δ` in `B_n`.
pub fn beta_family(n: usize, m: usize) -> Result<BraidWord> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("beta(n, m) needs m >= 1, got {m}")));
    }
    let d = delta(n)?;
    let block = d.compose(&delta_rev(n)?)?;
    block.pow(m as i64 - 1).compose(&d)
}

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// From a 1-based image array.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image: images.iter().map(|v| v - 1).collect() })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// `self` followed by `other`, acting on the left of points: `i ↦ other(self(i))`.
    /// This matches reading a braid word from left to right.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { image: self.image.iter().map(|&v| other.image[v]).collect() }
    }

    fn then_transposition(mut self, i: usize) -> Permutation {
        for v in self.image.iter_mut() {
            if *v == i - 1 {
                *v = i;
            } else if *v == i {
                *v = i - 1;
            }
        }
        self
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[Letter]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(1, vec![1]).is_err());
        assert_eq!(
            BraidWord::new(3, vec![-4]),
            Err(Error::GeneratorOutOfRange { index: 4, max: 2 })
        );
    }

    #[test]
    fn compose_concatenates() {
        assert_eq!(w(3, &[1]).compose(&w(3, &[-1])).unwrap().letters(), &[1, -1]);
        assert_eq!(w(3, &[1, 2]).compose(&w(3, &[2, 1])).unwrap().letters(), &[1, 2, 2, 1]);
        let dd = delta(3).unwrap().compose(&delta_rev(3).unwrap()).unwrap();
        assert_eq!(dd.letters(), &[1, 2, 2, 1]);
        assert_eq!(w(3, &[1]).compose(&w(4, &[1])), Err(Error::StrandMismatch(3, 4)));
    }

    #[test]
    fn free_reduction() {
        assert!(w(3, &[1, -1]).free_reduce().is_empty());
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).free_reduce().letters(), &[1, 2, 1]);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(3, &[]).exponent_sum(), 0);
        for n in 2..8 {
            assert_eq!(full_twist(n).unwrap().exponent_sum(), (n * (n - 1)) as i64);
            for m in 1..5 {
                let b = beta_family(n, m).unwrap();
                assert_eq!(b.exponent_sum(), ((2 * m - 1) * (n - 1)) as i64);
            }
        }
    }

    #[test]
    fn permutations() {
        assert!(w(3, &[]).permutation().is_identity());
        let p = w(3, &[1]).permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (2, 1, 3));
        // six transpositions (12)(23)(23)(12)(12)(23) compose to a 3-cycle
        assert_eq!(beta_family(3, 2).unwrap().permutation().cycle_type(), vec![3]);
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn component_counts() {
        assert_eq!(w(3, &[]).closure_component_count(), 3);
        for n in 2..10 {
            assert_eq!(delta(n).unwrap().closure_component_count(), 1);
        }
        assert_eq!(beta_family(5, 7).unwrap().closure_component_count(), 1);
    }

    #[test]
    fn positivity() {
        assert!(beta_family(4, 3).unwrap().is_positive());
        assert!(!w(3, &[1, -2]).is_positive());
        assert!(w(3, &[]).is_positive());
    }

    #[test]
    fn distinguished_words() {
        assert_eq!(delta(3).unwrap().letters(), &[1, 2]);
        assert_eq!(delta_rev(4).unwrap().letters(), &[3, 2, 1]);
        assert_eq!(full_twist(3).unwrap().letters(), &[1, 2, 1, 2, 1, 2]);
        assert!(delta(0).is_err());
        assert!(delta(1).unwrap().is_empty());
    }

    #[test]
    fn family() {
        assert_eq!(beta_family(5, 1).unwrap(), delta(5).unwrap());
        assert_eq!(beta_family(3, 2).unwrap().letters(), &[1, 2, 2, 1, 1, 2]);
        assert_eq!(beta_family(5, 3).unwrap().len(), 20);
        assert!(beta_family(3, 0).is_err());
        assert!(beta_family(1, 3).unwrap().is_empty());
    }

    #[test]
    fn markov_moves() {
        let s = w(2, &[]).markov_stabilize(true);
        assert_eq!((s.strands(), s.letters()), (3, &[2][..]));
        assert_eq!(delta(3).unwrap().markov_stabilize(true), delta(4).unwrap());
        let s = w(2, &[1]).markov_stabilize(false);
        assert_eq!((s.strands(), s.letters()), (3, &[1, -2][..]));

        assert_eq!(w(3, &[1, 2]).markov_destabilize(), Some(w(2, &[1])));
        assert_eq!(w(3, &[2, 2]).markov_destabilize(), None);
        assert_eq!(w(3, &[1]).markov_destabilize(), None);
        assert_eq!(w(2, &[1]).markov_destabilize(), Some(w(1, &[])));
        assert_eq!(w(1, &[]).markov_destabilize(), None);
        // rotation brings the lone top letter to the end
        assert_eq!(w(4, &[1, 3, 2, 1]).markov_destabilize(), Some(w(3, &[2, 1, 1])));
    }

    #[test]
    fn json_shape() {
        let b = w(3, &[1, -2]);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"strands":3,"letters":[1,-2]}"#);
        let back: BraidWord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":3,"letters":[3]}"#).is_err());
    }
}
