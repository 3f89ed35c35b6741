//! Integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial: `(exponent, coefficient)` pairs sorted by
/// exponent, with no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    /// From arbitrary `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut v: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    /// Dense coefficients `c_0 + c_1 t + …`, shifted by `t^offset`.
    pub fn from_dense(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    /// `1 + t + ⋯ + t^{n-1}`
    pub fn geometric(n: usize) -> Self {
        LaurentPoly { terms: (0..n as i64).map(|e| (e, BigInt::one())).collect() }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Exact value at an integer point. Negative exponents require `t = ±1`.
    pub fn eval(&self, t: i64) -> Result<BigInt> {
        if self.min_exp().is_some_and(|e| e < 0) && t.abs() != 1 {
            return Err(Error::InvalidArgument(format!("cannot evaluate t^-k at t={t}")));
        }
        let t = BigInt::from(t);
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| c * num_traits::pow(t.clone(), e.unsigned_abs() as usize))
            .sum())
    }

    pub fn eval_at_minus1(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.is_odd() { -c } else { c.clone() })
            .sum()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    fn dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else { return (0, Vec::new()) };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// Exact quotient `self / den` in the Laurent ring.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let not_divisible =
            || Error::NotDivisible { num: self.to_string(), den: den.to_string() };
        if den.is_zero() {
            return Err(not_divisible());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // both sides are t^a·N(t), t^b·D(t) with N(0), D(0) nonzero, so the
        // question is polynomial divisibility of N by D
        let (a, mut num) = self.dense();
        let (b, d) = den.dense();
        if num.len() < d.len() {
            return Err(not_divisible());
        }
        let lead = d.last().unwrap();
        let qlen = num.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &num[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    num[i + j] -= &c * dj;
                }
            }
            q[i] = c;
        }
        if num.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(Self::from_dense(a - b, q))
    }

    /// Unit multiple `±t^k · self` that is invariant under `t ↦ t⁻¹`,
    /// with positive value at `t = 1`. When that value is zero the top
    /// coefficient is made positive instead.
    pub fn normalize_symmetric(&self) -> Result<LaurentPoly> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Err(Error::NotSymmetrizable("0".into()));
        };
        if (lo + hi).is_odd() {
            return Err(Error::NotSymmetrizable(self.to_string()));
        }
        let shifted = self.shift(-(lo + hi) / 2);
        if shifted != shifted.mirror() {
            return Err(Error::NotSymmetrizable(self.to_string()));
        }
        let at_one = shifted.eval_at_one();
        let negative = if at_one.is_zero() {
            shifted.terms.last().unwrap().1.is_negative()
        } else {
            at_one.is_negative()
        };
        Ok(if negative { -shifted } else { shifted })
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let b_coeff = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() || j < b.terms.len() {
        match (a.terms.get(i), b.terms.get(j)) {
            (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                let c = if negate_b { ca - cb } else { ca + cb };
                if !c.is_zero() {
                    out.push((*ea, c));
                }
                i += 1;
                j += 1;
            }
            (Some((ea, ca)), Some((eb, _))) if ea < eb => {
                out.push((*ea, ca.clone()));
                i += 1;
            }
            (Some(_), Some((eb, cb))) | (None, Some((eb, cb))) => {
                out.push((*eb, b_coeff(cb)));
                j += 1;
            }
            (Some((ea, ca)), None) => {
                out.push((*ea, ca.clone()));
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (mono, other) = if self.terms.len() == 1 { (self, rhs) } else { (rhs, self) };
            let (e, c) = &mono.terms[0];
            return LaurentPoly {
                terms: other.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(lo, acc)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `c0*t^e0 + c1*t^e1 + …` with exponents descending; `0` for zero.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().rev().map(|(e, c)| format!("{c}*t^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
