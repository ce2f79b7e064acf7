//! Symbolic elements of M and the cardinal-stratum values `K` and `κ`.
//!
//! Every element the engine can name is one of three shapes:
//!
//! * a finite natural `n`,
//! * a landmark-relative number `o_i ± k`, where each landmark class is a copy of Z,
//! * a `w`-relative number: `w` itself, its successors `w_k`, or the
//!   predecessors `w-m` that still fit the all-but-finitely-many-ones digit form.
//!
//! Names are canonical: two values are equal iff their printed names are equal.

use std::fmt;
use std::num::NonZeroU64;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// An element of M.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MNumber {
    /// A finite natural number.
    Fin(BigUint),
    /// `o_index` shifted by `offset` successors (negative for predecessors).
    Lmk { index: NonZeroU64, offset: BigInt },
    /// `w` shifted by a signed offset: `W(0)` is `w`, `W(k > 0)` is `w_k`,
    /// `W(k < 0)` is `w-|k|`.
    W(BigInt),
}

impl MNumber {
    pub fn fin(n: impl Into<BigUint>) -> Self {
        MNumber::Fin(n.into())
    }

    pub fn w(offset: impl Into<BigInt>) -> Self {
        MNumber::W(offset.into())
    }

    /// Landmark-relative number `o_index + offset`.
    ///
    /// Panics when `index` is zero; use [`MNumber::try_lmk`] for untrusted input.
    pub fn lmk(index: u64, offset: impl Into<BigInt>) -> Self {
        Self::try_lmk(index, offset).expect("landmark index must be positive")
    }

    pub fn try_lmk(index: u64, offset: impl Into<BigInt>) -> Result<Self> {
        let index = NonZeroU64::new(index)
            .ok_or_else(|| Error::Precondition("landmark index must be at least 1".into()))?;
        Ok(MNumber::Lmk {
            index,
            offset: offset.into(),
        })
    }

    pub fn zero() -> Self {
        MNumber::Fin(BigUint::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, MNumber::Fin(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    /// Offset of an infinite element relative to its class anchor.
    pub fn offset(&self) -> Option<&BigInt> {
        match self {
            MNumber::Fin(_) => None,
            MNumber::Lmk { offset, .. } | MNumber::W(offset) => Some(offset),
        }
    }

    /// Same class, different offset. Finite values are returned unchanged.
    pub(crate) fn with_offset(&self, offset: BigInt) -> Self {
        match self {
            MNumber::Fin(n) => MNumber::Fin(n.clone()),
            MNumber::Lmk { index, .. } => MNumber::Lmk {
                index: *index,
                offset,
            },
            MNumber::W(_) => MNumber::W(offset),
        }
    }

    /// Image in the cardinal stratum: finite values keep their size, every
    /// infinite element collapses to `K`.
    pub fn card_image(&self) -> CardValue {
        match self {
            MNumber::Fin(n) => CardValue::Fin(n.clone()),
            _ => CardValue::K,
        }
    }

    /// The structural-descriptive name of this element.
    pub fn canonical_name(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`MNumber::canonical_name`].
    pub fn parse_name(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for MNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MNumber::Fin(n) => write!(f, "{n}"),
            MNumber::W(k) => match k.sign() {
                Sign::NoSign => f.write_str("w"),
                Sign::Plus => write!(f, "w_{k}"),
                Sign::Minus => write!(f, "w-{}", k.abs()),
            },
            MNumber::Lmk { index, offset } => match offset.sign() {
                Sign::NoSign => write!(f, "o_{index}"),
                Sign::Plus => write!(f, "o_{index}+{offset}"),
                Sign::Minus => write!(f, "o_{index}-{}", offset.abs()),
            },
        }
    }
}

/// Parses a canonical decimal: no sign, no leading zeros except `0` itself.
fn parse_nat(input: &str, digits: &str) -> Result<BigUint> {
    let bad = |token: &str| Error::MalformedName {
        input: input.to_string(),
        token: token.to_string(),
    };
    if digits.is_empty() {
        return Err(bad("<end of input>"));
    }
    if let Some(c) = digits.chars().find(|c| !c.is_ascii_digit()) {
        return Err(bad(&c.to_string()));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(bad(digits));
    }
    Ok(digits.parse().expect("ascii digits"))
}

/// Parses a strictly positive canonical decimal.
fn parse_pos(input: &str, digits: &str) -> Result<BigUint> {
    let n = parse_nat(input, digits)?;
    if n.is_zero() {
        return Err(Error::MalformedName {
            input: input.to_string(),
            token: digits.to_string(),
        });
    }
    Ok(n)
}

impl FromStr for MNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |token: &str| Error::MalformedName {
            input: s.to_string(),
            token: token.to_string(),
        };
        if s.is_empty() {
            return Err(bad("<end of input>"));
        }
        if s.as_bytes()[0].is_ascii_digit() {
            return parse_nat(s, s).map(MNumber::Fin);
        }
        if s == "w" {
            return Ok(MNumber::W(BigInt::zero()));
        }
        if let Some(rest) = s.strip_prefix("w_") {
            let k = parse_pos(s, rest)?;
            return Ok(MNumber::W(BigInt::from(k)));
        }
        if let Some(rest) = s.strip_prefix("w-") {
            let m = parse_pos(s, rest)?;
            return Ok(MNumber::W(-BigInt::from(m)));
        }
        if let Some(rest) = s.strip_prefix("o_") {
            let split = rest.find(['+', '-']).unwrap_or(rest.len());
            let (idx, tail) = rest.split_at(split);
            let idx = parse_pos(s, idx)?;
            let index = u64::try_from(idx)
                .ok()
                .and_then(NonZeroU64::new)
                .ok_or_else(|| bad(&rest[..split]))?;
            let offset = match tail.chars().next() {
                None => BigInt::zero(),
                Some('+') => BigInt::from(parse_pos(s, &tail[1..])?),
                Some(_) => -BigInt::from(parse_pos(s, &tail[1..])?),
            };
            return Ok(MNumber::Lmk { index, offset });
        }
        let token: String = s.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
        Err(bad(if token.is_empty() { &s[..s.chars().next().unwrap().len_utf8()] } else { &token }))
    }
}

/// A value in the cardinal stratum: a finite size, `K = |N|`, or the
/// indeterminate `κ` ("either K or some finite natural").
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CardValue {
    Fin(BigUint),
    K,
    Kappa,
}

impl CardValue {
    pub fn fin(n: impl Into<BigUint>) -> Self {
        CardValue::Fin(n.into())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CardValue::Fin(n) if n.is_zero())
    }

    /// Name with `κ` spelled `kappa`.
    pub fn ascii_name(&self) -> String {
        match self {
            CardValue::Kappa => "kappa".to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for CardValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardValue::Fin(n) => write!(f, "{n}"),
            CardValue::K => f.write_str("K"),
            CardValue::Kappa => f.write_str("κ"),
        }
    }
}

impl FromStr for CardValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(CardValue::K),
            "kappa" | "κ" => Ok(CardValue::Kappa),
            _ => parse_nat(s, s).map(CardValue::Fin),
        }
    }
}

/// Result of element-level arithmetic: either still an element of M, or
/// escalated to the cardinal stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Elem(MNumber),
    Card(CardValue),
}

impl Value {
    pub fn card_image(&self) -> CardValue {
        match self {
            Value::Elem(x) => x.card_image(),
            Value::Card(c) => c.clone(),
        }
    }
}

impl From<MNumber> for Value {
    fn from(x: MNumber) -> Self {
        Value::Elem(x)
    }
}

impl From<CardValue> for Value {
    fn from(c: CardValue) -> Self {
        Value::Card(c)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(x) => x.fmt(f),
            Value::Card(c) => c.fmt(f),
        }
    }
}

/// Parses any name from the shared literal grammar, including `K` and `kappa`.
pub fn parse_value(s: &str) -> Result<Value> {
    match s {
        "K" | "kappa" | "κ" => s.parse().map(Value::Card),
        _ => s.parse().map(Value::Elem),
    }
}
