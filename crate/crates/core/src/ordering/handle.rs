//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}` where `v` uses only
//! generators `σ_j` with `j > i`. Reducing it deletes the two ends and
//! replaces every `σ_{i+1}^d` inside by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//! Repeating until no handle is left yields a word whose lowest generator
//! appears with a single sign, which decides the Dehornoy order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "class", content = "index")]
pub enum SigmaClass {
    SigmaPositive(usize),
    SigmaNegative(usize),
    Trivial,
}

impl SigmaClass {
    pub fn opposite(self) -> SigmaClass {
        match self {
            SigmaClass::SigmaPositive(i) => SigmaClass::SigmaNegative(i),
            SigmaClass::SigmaNegative(i) => SigmaClass::SigmaPositive(i),
            SigmaClass::Trivial => SigmaClass::Trivial,
        }
    }

    /// Position relative to the identity.
    pub fn ordering(self) -> Ordering {
        match self {
            SigmaClass::SigmaPositive(_) => Ordering::Greater,
            SigmaClass::SigmaNegative(_) => Ordering::Less,
            SigmaClass::Trivial => Ordering::Equal,
        }
    }
}

/// Handle with the leftmost right end, as `(start, end)` inclusive.
/// Such a handle contains no other handle, so it is always permitted.
fn leftmost_handle(letters: &[Letter], strands: usize) -> Option<(usize, usize)> {
    // open[i] = position of the latest σ_i^{±1} not yet followed by any σ_j, j <= i
    let mut open: Vec<Option<usize>> = vec![None; strands];
    let mut top = 0usize;
    for (pos, &e) in letters.iter().enumerate() {
        let i = e.unsigned_abs() as usize;
        if let Some(p) = open[i] {
            if letters[p] == -e {
                return Some((p, pos));
            }
        }
        open[i] = Some(pos);
        for slot in open.iter_mut().take(top + 1).skip(i + 1) {
            *slot = None;
        }
        // everything above i is now closed
        top = i;
    }
    None
}

fn reduce_handle(letters: &mut Vec<Letter>, start: usize, end: usize) {
    let e = letters[start].signum();
    let i = letters[start].abs();
    let mut replacement = Vec::with_capacity(3 * (end - start));
    for &d in &letters[start + 1..end] {
        if d.abs() == i + 1 {
            replacement.push(-e * (i + 1));
            replacement.push(d.signum() * i);
            replacement.push(e * (i + 1));
        } else {
            replacement.push(d);
        }
    }
    letters.splice(start..=end, replacement);
}

/// Reduces `w` to a handle-free word and classifies it.
pub fn handle_reduce(w: &BraidWord, step_limit: usize) -> Result<(BraidWord, SigmaClass)> {
    if step_limit == 0 {
        return Err(Error::InvalidArgument("step limit must be positive".into()));
    }
    let n = w.strands();
    let mut letters = w.free_reduce().letters().to_vec();
    let mut steps = 0usize;
    while let Some((start, end)) = leftmost_handle(&letters, n) {
        if steps == step_limit {
            return Err(Error::StepLimit(step_limit));
        }
        reduce_handle(&mut letters, start, end);
        steps += 1;
    }
    let class = classify_handle_free(&letters);
    Ok((BraidWord::from_parts(n, letters), class))
}

fn classify_handle_free(letters: &[Letter]) -> SigmaClass {
    match letters.iter().min_by_key(|e| e.abs()) {
        None => SigmaClass::Trivial,
        Some(&e) if e > 0 => SigmaClass::SigmaPositive(e as usize),
        Some(&e) => SigmaClass::SigmaNegative(e.unsigned_abs() as usize),
    }
}

pub fn sigma_class(w: &BraidWord, step_limit: usize) -> Result<SigmaClass> {
    handle_reduce(w, step_limit).map(|(_, c)| c)
}

/// Dehornoy order: `a < b` iff `a⁻¹ b` is σ-positive.
pub fn compare_dehornoy(a: &BraidWord, b: &BraidWord, step_limit: usize) -> Result<Ordering> {
    let quotient = a.inverse().compose(b)?;
    Ok(sigma_class(&quotient, step_limit)?.ordering().reverse())
}
