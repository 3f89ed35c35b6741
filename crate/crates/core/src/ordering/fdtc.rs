use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::handle::{sigma_class, SigmaClass, DEFAULT_STEP_LIMIT};
use super::rational::{rationals_in, Rational};
use crate::braid::{full_twist, BraidWord};
use crate::error::{Error, Result};

/// The Dehornoy floor: the unique `m` with `Δ^{2m} ≼ w ≺ Δ^{2m+2}`.
pub fn dehornoy_floor(w: &BraidWord, step_limit: usize) -> Result<i64> {
    floor_with_witness(w, step_limit, None).map(|(m, _)| m)
}

/// Floor together with whether `w = Δ^{2m}` exactly. The search starts at
/// `guess`, or at the exponent-sum estimate, and gallops outward until the
/// floor is bracketed.
fn floor_with_witness(w: &BraidWord, step_limit: usize, guess: Option<i64>) -> Result<(i64, bool)> {
    let n = w.strands();
    if n == 1 {
        // B_1 is trivial and Δ² is the identity
        return Ok((0, true));
    }
    let twist_inv = full_twist(n)?.inverse();
    // class of Δ^{-2m} w; nonnegative exactly when Δ^{2m} ≼ w
    let class_at = |m: i64| -> Result<SigmaClass> {
        sigma_class(&twist_inv.pow(m).compose(w)?, step_limit)
    };
    let nonneg = |c: SigmaClass| !matches!(c, SigmaClass::SigmaNegative(_));

    let per_twist = (n * (n - 1)) as i64;
    let start = guess.unwrap_or_else(|| Integer::div_floor(&w.exponent_sum(), &per_twist));
    let first = class_at(start)?;
    // invariant: nonneg at lo (with class lo_class), negative at hi
    let (mut lo, mut lo_class, mut hi);
    if nonneg(first) {
        (lo, lo_class) = (start, first);
        let mut step = 1;
        loop {
            let c = class_at(lo + step)?;
            if !nonneg(c) {
                hi = lo + step;
                break;
            }
            (lo, lo_class) = (lo + step, c);
            step *= 2;
        }
    } else {
        hi = start;
        let mut step = 1;
        loop {
            let c = class_at(hi - step)?;
            if nonneg(c) {
                (lo, lo_class) = (hi - step, c);
                break;
            }
            hi -= step;
            step *= 2;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let c = class_at(mid)?;
        if nonneg(c) {
            (lo, lo_class) = (mid, c);
        } else {
            hi = mid;
        }
    }
    Ok((lo, lo_class == SigmaClass::Trivial))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdtcEstimate {
    pub lower: Rational,
    pub upper: Rational,
    pub pinned: Option<Rational>,
    pub power_used: u32,
}

impl FdtcEstimate {
    pub fn exact(value: Rational, power_used: u32) -> Self {
        FdtcEstimate { lower: value, upper: value, pinned: Some(value), power_used }
    }

    pub fn contains(&self, r: Rational) -> bool {
        self.lower <= r && r <= self.upper
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> Rational {
        self.upper - self.lower
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FdtcOptions {
    pub max_power: u32,
    pub denominator_bound: Option<i64>,
    pub step_limit: usize,
    /// Also sandwich every cyclic rotation of the word and its half-twist
    /// conjugate. All of them share the coefficient, so their intervals
    /// can be intersected.
    pub use_conjugates: bool,
}

impl Default for FdtcOptions {
    fn default() -> Self {
        FdtcOptions {
            max_power: 6,
            denominator_bound: None,
            step_limit: DEFAULT_STEP_LIMIT,
            use_conjugates: true,
        }
    }
}

pub fn fdtc(w: &BraidWord, max_power: u32, denominator_bound: Option<i64>) -> Result<FdtcEstimate> {
    fdtc_with(w, &FdtcOptions { max_power, denominator_bound, ..FdtcOptions::default() })
}

/// Rational interval for the fractional Dehn twist coefficient `ω(w)`.
///
/// For every power `N ≤ max_power` and every conjugate `c` considered,
/// `⌊c^N⌋ ≤ N·ω(w) ≤ ⌊c^N⌋ + 1`. If some `c^N` equals `Δ^{2f}` on the nose
/// the value `f/N` is exact. Otherwise a value is pinned only when the
/// caller's denominator bound leaves a single candidate in the interval.
/// The sweep stops at the first power that pins.
pub fn fdtc_with(w: &BraidWord, opts: &FdtcOptions) -> Result<FdtcEstimate> {
    if opts.max_power < 1 {
        return Err(Error::InvalidArgument("max_power must be at least 1".into()));
    }
    if let Some(d) = opts.denominator_bound {
        if d < 1 {
            return Err(Error::InvalidArgument("denominator bound must be at least 1".into()));
        }
    }
    let reduced = w.free_reduce();
    let conjugates = if opts.use_conjugates { conjugates_of(&reduced) } else { vec![reduced] };

    let mut lower = Rational::integer(i64::MIN / 2);
    let mut upper = Rational::integer(i64::MAX / 2);
    let mut pinned = None;
    let mut power_used = 0;
    // conjugates have floors within one of each other
    let mut guess = None;
    for power in 1..=opts.max_power {
        power_used = power;
        for c in &conjugates {
            let (f, exact) = floor_with_witness(&c.pow(power as i64), opts.step_limit, guess)?;
            guess = Some(f);
            let lo = Rational::new(f, power as i64);
            if exact {
                return Ok(FdtcEstimate::exact(lo, power));
            }
            lower = lower.max(lo);
            upper = upper.min(Rational::new(f + 1, power as i64));
            if lower == upper {
                break;
            }
        }
        guess = Some(Integer::div_floor(&(lower.numer() * (power as i64 + 1)), &lower.denom()));
        debug_assert!(lower <= upper, "floor sandwich violated");
        pinned = if lower == upper {
            Some(lower)
        } else {
            opts.denominator_bound.and_then(|d| match rationals_in(lower, upper, d).as_slice() {
                [only] => Some(*only),
                _ => None,
            })
        };
        // higher powers only shrink the interval, so a unique candidate stays unique
        if pinned.is_some() {
            break;
        }
    }
    Ok(FdtcEstimate { lower, upper, pinned, power_used })
}

fn conjugates_of(w: &BraidWord) -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = Vec::new();
    let flipped = w.flip();
    for base in [w, &flipped] {
        for k in 0..base.len().max(1) {
            let r = base.rotate(k).free_reduce();
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// Coefficient of the lift to the double branched cover: `ω(BH(β)) = ω(β)/2`,
/// valid when the page has one boundary component, i.e. for odd `n`.
pub fn bh_fdtc(est: &FdtcEstimate, strands: usize) -> Result<FdtcEstimate> {
    if strands.is_multiple_of(2) {
        return Err(Error::EvenStrands("Birman-Hilden halving", strands));
    }
    Ok(FdtcEstimate {
        lower: est.lower.half(),
        upper: est.upper.half(),
        pinned: est.pinned.map(Rational::half),
        power_used: est.power_used,
    })
}
