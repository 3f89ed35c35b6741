//! Braid expressions.
//!
//! ```text
//! expr := term {term}
//! term := atom ["^" signed-int]
//! atom := "s" int | "d" | "dR" | "D2" | "beta(" int "," int ")" | "(" expr ")"
//! ```
//!
//! `d` is `σ1⋯σ_{n-1}`, `dR` is `σ_{n-1}⋯σ1`, `D2` the full twist and
//! `beta(n,m)` the word `(d dR)^{m-1} d` on `n` strands.

use std::fmt;

use crate::braid::{beta_family, delta, delta_rev, full_twist, BraidWord};
use crate::error::{Error, Result};

/// Flattened words longer than this are rejected.
pub const MAX_WORD_LEN: usize = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidExpr {
    Generator(usize),
    Delta,
    DeltaRev,
    FullTwist,
    Family(usize, usize),
    Concat(Vec<BraidExpr>),
    Power(Box<BraidExpr>, i64),
    Inverse(Box<BraidExpr>),
}

pub fn parse_expr(text: &str, strands: usize) -> Result<BraidExpr> {
    if strands < 1 {
        return Err(Error::TooFewStrands(strands));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    e.check(strands)?;
    Ok(e)
}

/// Parses and flattens in one step.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    parse_expr(text, strands)?.to_word(strands)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) { Ok(()) } else { Err(self.error(format!("expected {lit:?}"))) }
    }

    fn at_atom_start(&self) -> bool {
        matches!(self.peek(), Some(b's' | b'd' | b'D' | b'b' | b'('))
    }

    fn expr(&mut self) -> Result<BraidExpr> {
        let mut terms = Vec::new();
        while self.at_atom_start() {
            terms.push(self.term()?);
            self.skip_ws();
        }
        match terms.len() {
            0 => Err(self.error("expected a braid term")),
            1 => Ok(terms.pop().unwrap()),
            _ => Ok(BraidExpr::Concat(terms)),
        }
    }

    fn term(&mut self) -> Result<BraidExpr> {
        let atom = self.atom()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat("^") {
            self.skip_ws();
            let k = self.signed_int()?;
            Ok(BraidExpr::Power(Box::new(atom), k))
        } else {
            self.pos = save;
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<BraidExpr> {
        if self.eat("beta(") {
            self.skip_ws();
            let n = self.uint()?;
            self.skip_ws();
            self.expect(",")?;
            self.skip_ws();
            let m = self.uint()?;
            self.skip_ws();
            self.expect(")")?;
            return Ok(BraidExpr::Family(n, m));
        }
        if self.eat("(") {
            self.skip_ws();
            let inner = self.expr()?;
            self.skip_ws();
            self.expect(")")?;
            return Ok(inner);
        }
        if self.eat("dR") {
            return Ok(BraidExpr::DeltaRev);
        }
        if self.eat("d") {
            return Ok(BraidExpr::Delta);
        }
        if self.eat("D2") {
            return Ok(BraidExpr::FullTwist);
        }
        if self.eat("s") {
            return Ok(BraidExpr::Generator(self.uint()?));
        }
        Err(self.error("expected s<k>, d, dR, D2, beta(n,m) or '('"))
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = self.eat("-");
        if !negative {
            self.eat("+");
        }
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v)
            .map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
        Ok(if negative { -v } else { v })
    }
}

impl BraidExpr {
    fn check(&self, strands: usize) -> Result<()> {
        match self {
            BraidExpr::Generator(i) => {
                if *i == 0 || *i > strands - 1 {
                    return Err(Error::GeneratorOutOfRange { index: *i, max: strands - 1 });
                }
                Ok(())
            }
            BraidExpr::Family(n, m) => {
                if *n < 1 || *n > strands || *m < 1 {
                    return Err(Error::InvalidArgument(format!(
                        "beta({n},{m}) needs 1 <= n <= {strands} and m >= 1"
                    )));
                }
                Ok(())
            }
            BraidExpr::Delta | BraidExpr::DeltaRev | BraidExpr::FullTwist => Ok(()),
            BraidExpr::Concat(parts) => parts.iter().try_for_each(|p| p.check(strands)),
            BraidExpr::Power(e, _) | BraidExpr::Inverse(e) => e.check(strands),
        }
    }

    /// Upper bound on the flattened length, saturating.
    fn flat_len(&self, strands: usize) -> usize {
        match self {
            BraidExpr::Generator(_) => 1,
            BraidExpr::Delta | BraidExpr::DeltaRev => strands - 1,
            BraidExpr::FullTwist => strands * (strands - 1),
            BraidExpr::Family(n, m) => (2 * m).saturating_sub(1).saturating_mul(n - 1),
            BraidExpr::Concat(parts) => {
                parts.iter().fold(0usize, |acc, p| acc.saturating_add(p.flat_len(strands)))
            }
            BraidExpr::Power(e, k) => {
                e.flat_len(strands).saturating_mul(k.unsigned_abs().try_into().unwrap_or(usize::MAX))
            }
            BraidExpr::Inverse(e) => e.flat_len(strands),
        }
    }

    pub fn to_word(&self, strands: usize) -> Result<BraidWord> {
        if strands < 1 {
            return Err(Error::TooFewStrands(strands));
        }
        self.check(strands)?;
        let len = self.flat_len(strands);
        if len > MAX_WORD_LEN {
            return Err(Error::InvalidArgument(format!(
                "expression expands to {len} letters, limit is {MAX_WORD_LEN}"
            )));
        }
        self.flatten(strands)
    }

    fn flatten(&self, strands: usize) -> Result<BraidWord> {
        match self {
            BraidExpr::Generator(i) => BraidWord::new(strands, vec![*i as i32]),
            BraidExpr::Delta => delta(strands),
            BraidExpr::DeltaRev => delta_rev(strands),
            BraidExpr::FullTwist => full_twist(strands),
            BraidExpr::Family(n, m) => beta_family(*n, *m)?.embed(strands),
            BraidExpr::Concat(parts) => {
                let mut acc = BraidWord::identity(strands)?;
                for p in parts {
                    acc = acc.compose(&p.flatten(strands)?)?;
                }
                Ok(acc)
            }
            BraidExpr::Power(e, k) => Ok(e.flatten(strands)?.pow(*k)),
            BraidExpr::Inverse(e) => Ok(e.flatten(strands)?.inverse()),
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, BraidExpr::Concat(_) | BraidExpr::Power(..) | BraidExpr::Inverse(_))
    }

    fn fmt_as_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() { write!(f, "{self}") } else { write!(f, "({self})") }
    }
}

/// Renders in the input grammar; the output parses back to the same tree.
impl fmt::Display for BraidExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidExpr::Generator(i) => write!(f, "s{i}"),
            BraidExpr::Delta => write!(f, "d"),
            BraidExpr::DeltaRev => write!(f, "dR"),
            BraidExpr::FullTwist => write!(f, "D2"),
            BraidExpr::Family(n, m) => write!(f, "beta({n},{m})"),
            BraidExpr::Concat(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    // a nested concat keeps its parentheses
                    if matches!(p, BraidExpr::Concat(_) | BraidExpr::Inverse(_)) {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
            BraidExpr::Power(e, k) => {
                e.fmt_as_atom(f)?;
                write!(f, "^{k}")
            }
            BraidExpr::Inverse(e) => {
                e.fmt_as_atom(f)?;
                write!(f, "^-1")
            }
        }
    }
}
