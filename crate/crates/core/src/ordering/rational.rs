use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational in lowest terms with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Rational {
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(value: i64) -> Rational {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn half(self) -> Rational {
        Rational(self.0 / 2)
    }

    pub fn floor(self) -> i64 {
        Integer::div_floor(&self.numer(), &self.denom())
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Format(format!("not a rational: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Rational::new(p, q))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All rationals in the closed interval `[lo, hi]` with denominator at most
/// `max_denom`, in increasing order. Found by descending the Stern–Brocot
/// tree below each unit interval, pruning subtrees that miss `[lo, hi]`.
pub fn rationals_in(lo: Rational, hi: Rational, max_denom: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    if lo > hi || max_denom < 1 {
        return out;
    }
    for k in lo.floor()..=hi.floor() {
        let left = (k, 1);
        if Rational::integer(k) >= lo {
            out.push(Rational::integer(k));
        }
        descend(left, (k + 1, 1), lo, hi, max_denom, &mut out);
    }
    out
}

fn descend(
    left: (i64, i64),
    right: (i64, i64),
    lo: Rational,
    hi: Rational,
    max_denom: i64,
    out: &mut Vec<Rational>,
) {
    let (a, b) = left;
    let (c, d) = right;
    if b + d > max_denom {
        return;
    }
    // descendants lie strictly between left and right
    if Rational::new(c, d) <= lo || Rational::new(a, b) >= hi {
        return;
    }
    let mid = (a + c, b + d);
    let m = Rational::new(mid.0, mid.1);
    descend(left, mid, lo, hi, max_denom, out);
    if m >= lo && m <= hi {
        out.push(m);
    }
    descend(mid, right, lo, hi, max_denom, out);
}
