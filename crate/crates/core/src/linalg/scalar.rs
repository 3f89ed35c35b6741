use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingTag {
    Int,
    Laurent,
}

impl RingTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::Int => "int",
            RingTag::Laurent => "laurent",
        }
    }
}

/// Entries of an [`super::Matrix`]: a commutative integral domain with
/// exact division.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync {
    const RING: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, failing unless the division is exact.
    fn divide_exact(&self, other: &Self) -> Result<Self>;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Scalar for BigInt {
    const RING: RingTag = RingTag::Int;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn divide_exact(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return Err(Error::NotDivisible { num: self.to_string(), den: "0".into() });
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible { num: self.to_string(), den: other.to_string() })
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse().map_err(|_| Error::Format(format!("bad integer {s:?}"))),
            Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
            other => Err(Error::Format(format!("expected integer string, got {other}"))),
        }
    }
}

impl Scalar for LaurentPoly {
    const RING: RingTag = RingTag::Laurent;

    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn divide_exact(&self, other: &Self) -> Result<Self> {
        LaurentPoly::divide_exact(self, other)
    }

    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }

    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))
    }
}
