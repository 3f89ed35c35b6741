//! Open books on double branched covers of braid closures.
//!
//! A braid `β ∈ B_n` gives an open book on `Σ(β̂)` whose page is the double
//! cover `Σ(D_n)` of the disc branched at `n` points and whose monodromy is
//! the Birman-Hilden lift of `β`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{beta_family, BraidWord};
use crate::burau::{alexander_polynomial, burau_at_minus1, direct_determinant, knot_determinant};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::ordering::{bh_fdtc, fdtc_with, FdtcEstimate, FdtcOptions, Rational, DEFAULT_STEP_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Page {
    pub strands: usize,
    pub genus: usize,
    pub boundary_components: usize,
    pub euler_characteristic: i64,
}

/// `Σ(D_n)`: genus `(n-1)/2` with one boundary circle for odd `n`, genus
/// `(n-2)/2` with two for even `n`.
pub fn page_of(n: usize) -> Result<Page> {
    if n < 1 {
        return Err(Error::TooFewStrands(n));
    }
    let (genus, boundary_components) = if n % 2 == 1 { ((n - 1) / 2, 1) } else { ((n - 2) / 2, 2) };
    Ok(Page {
        strands: n,
        genus,
        boundary_components,
        euler_characteristic: 2 - 2 * genus as i64 - boundary_components as i64,
    })
}

/// A positive word lifts to a product of positive Dehn twists. `false`
/// only means this representative gives no certificate.
pub fn stein_witness(w: &BraidWord) -> bool {
    w.is_positive()
}

fn require_odd_knot(w: &BraidWord) -> Result<()> {
    if w.strands().is_multiple_of(2) {
        return Err(Error::EvenStrands("H1 of the double branched cover via f_*", w.strands()));
    }
    match w.closure_component_count() {
        1 => Ok(()),
        c => Err(Error::NotAKnot(c)),
    }
}

/// `|H₁(Σ(K))|` for the closure `K`; `0` stands for an infinite group.
pub fn h1_order(w: &BraidWord) -> Result<BigInt> {
    require_odd_knot(w)?;
    knot_determinant(w)
}

/// Invariant factors of `H₁(Σ(K))`, presented by `I - f_*(w)`. Trivial
/// factors are dropped, so the unknot gives an empty list.
pub fn h1_invariant_factors(w: &BraidWord) -> Result<Vec<BigInt>> {
    require_odd_knot(w)?;
    let f = burau_at_minus1(w);
    let m = IntMatrix::identity(f.rows()).sub(&f)?;
    Ok(smith_normal_form(&m).cokernel_factors())
}

/// FDTC search settings for reports. A missing denominator bound means `4n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FdtcParams {
    pub max_power: u32,
    pub denominator_bound: Option<i64>,
    pub step_limit: usize,
}

impl Default for FdtcParams {
    fn default() -> Self {
        FdtcParams { max_power: 6, denominator_bound: None, step_limit: DEFAULT_STEP_LIMIT }
    }
}

impl FdtcParams {
    pub fn options_for(&self, strands: usize) -> FdtcOptions {
        FdtcOptions {
            max_power: self.max_power,
            denominator_bound: Some(self.denominator_bound.unwrap_or(4 * strands as i64)),
            step_limit: self.step_limit,
            ..FdtcOptions::default()
        }
    }
}

mod big_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => s.serialize_some(&v.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|v| v.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenBookReport {
    pub braid: BraidWord,
    pub page: Page,
    pub binding_connected: bool,
    /// Coefficient of the lifted monodromy; odd `n` only.
    pub fdtc_upstairs: Option<FdtcEstimate>,
    pub stein_witness: bool,
    #[serde(with = "big_string::opt")]
    pub h1_order: Option<BigInt>,
}

pub fn open_book_report(w: &BraidWord, params: &FdtcParams) -> Result<OpenBookReport> {
    let n = w.strands();
    let page = page_of(n)?;
    let odd = n % 2 == 1;
    let fdtc_upstairs = if odd {
        let est = fdtc_with(w, &params.options_for(n))?;
        Some(bh_fdtc(&est, n)?)
    } else {
        None
    };
    let h1_order = if odd && w.is_knot_closure() { Some(h1_order(w)?) } else { None };
    Ok(OpenBookReport {
        braid: w.clone(),
        page,
        binding_connected: page.boundary_components == 1,
        fdtc_upstairs,
        stein_witness: stein_witness(w),
        h1_order,
    })
}

/// `4k² + 4k - 1`.
pub fn predicted_h1_order(k: u64) -> BigInt {
    let k = BigInt::from(k);
    BigInt::from(4) * &k * &k + BigInt::from(4) * &k - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop41Row {
    pub k: u64,
    /// `|det(I - f_*(β_{2k+1,2k+3}))|`
    #[serde(with = "big_string")]
    pub det_narrow: BigInt,
    /// `|det(I - f_*(β_{2k+3,2k+1}))|`
    #[serde(with = "big_string")]
    pub det_wide: BigInt,
    #[serde(with = "big_string")]
    pub predicted: BigInt,
    pub pass_narrow: bool,
    pub pass_wide: bool,
}

impl Prop41Row {
    pub fn passed(&self) -> bool {
        self.pass_narrow && self.pass_wide
    }
}

fn family_determinant(n: u64, m: u64) -> Result<BigInt> {
    direct_determinant(&beta_family(n as usize, m as usize)?)
}

/// Both index orders of the family against `4k² + 4k - 1`, for `1 ≤ k ≤ k_max`.
pub fn verify_prop41(k_max: u64) -> Result<Vec<Prop41Row>> {
    if k_max < 1 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let det_narrow = family_determinant(2 * k + 1, 2 * k + 3)?;
            let det_wide = family_determinant(2 * k + 3, 2 * k + 1)?;
            let predicted = predicted_h1_order(k);
            Ok(Prop41Row {
                k,
                pass_narrow: det_narrow == predicted,
                pass_wide: det_wide == predicted,
                det_narrow,
                det_wide,
                predicted,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub n: usize,
    pub m: usize,
    pub page: Page,
    pub stein_witness: bool,
    #[serde(with = "big_string")]
    pub determinant: BigInt,
    pub alexander: LaurentPoly,
}

impl FamilyMember {
    fn new(n: usize, m: usize) -> Result<FamilyMember> {
        let w = beta_family(n, m)?;
        Ok(FamilyMember {
            n,
            m,
            page: page_of(n)?,
            stein_witness: stein_witness(&w),
            determinant: knot_determinant(&w)?,
            alexander: alexander_polynomial(&w)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem12Report {
    pub k: usize,
    /// `β_{2k+3,2k+1}`, pages of genus `k+1`.
    pub high_genus: FamilyMember,
    /// `β_{2k+1,2k+3}`, pages of genus `k`.
    pub low_genus: FamilyMember,
    pub fdtc_upstairs: FdtcEstimate,
    pub expected_fdtc: Rational,
    pub determinants_equal: bool,
    pub alexander_equal: bool,
    pub genus_pass: bool,
    pub fdtc_pass: bool,
}

impl Theorem12Report {
    pub fn passed(&self) -> bool {
        self.genus_pass
            && self.fdtc_pass
            && self.determinants_equal
            && self.alexander_equal
            && self.high_genus.stein_witness
            && self.low_genus.stein_witness
    }
}

/// Compares the two braidings of the same knot: the wide one has pages of
/// genus `k+1` and lifted coefficient `k`, the narrow one genus `k`.
pub fn theorem12_report(k: usize, params: &FdtcParams) -> Result<Theorem12Report> {
    let high_genus = FamilyMember::new(2 * k + 3, 2 * k + 1)?;
    let low_genus = FamilyMember::new(2 * k + 1, 2 * k + 3)?;
    let n = high_genus.n;
    let est = fdtc_with(&beta_family(n, high_genus.m)?, &params.options_for(n))?;
    let fdtc_upstairs = bh_fdtc(&est, n)?;
    let expected_fdtc = Rational::integer(k as i64);
    Ok(Theorem12Report {
        k,
        determinants_equal: high_genus.determinant == low_genus.determinant,
        alexander_equal: high_genus.alexander == low_genus.alexander,
        genus_pass: high_genus.page.genus == k + 1 && low_genus.page.genus == k,
        fdtc_pass: fdtc_upstairs.pinned == Some(expected_fdtc),
        high_genus,
        low_genus,
        fdtc_upstairs,
        expected_fdtc,
    })
}
