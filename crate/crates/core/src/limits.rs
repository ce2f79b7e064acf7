//! Symbolic limits of a small closed family of sequences.
//!
//! Two readings of "limit" are supported. The ordinary limit is the point the
//! sequence approaches without passing; the extreme-part limit ([`eval_xtr_limit`])
//! is what lies at the far end of the index domain itself. Only the
//! (family, domain) pairs with a known answer are evaluated; everything else is
//! an error, never a guessed `NoLimit`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::element;
use crate::error::{Error, Result};
use crate::number::MNumber;

pub const MAX_PREFIX: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    /// `1…11` with `n` ones, i.e. `2ⁿ − 1`.
    OnesRun,
    /// `2ⁿ`, the same as `OnesRun + 1`.
    Pow2,
    /// `n` itself.
    Identity,
    Affine(Box<SeqFamily>, BigUint),
}

impl SeqFamily {
    pub fn shifted(self, by: impl Into<BigUint>) -> Self {
        SeqFamily::Affine(Box::new(self), by.into())
    }

    /// `n`-th term (1-based) as a finite value.
    pub fn term(&self, n: u64) -> BigUint {
        match self {
            SeqFamily::OnesRun => (BigUint::one() << n) - 1u32,
            SeqFamily::Pow2 => BigUint::one() << n,
            SeqFamily::Identity => BigUint::from(n),
            SeqFamily::Affine(base, c) => base.term(n) + c,
        }
    }
}

impl fmt::Display for SeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqFamily::OnesRun => f.write_str("ones(n)"),
            SeqFamily::Pow2 => f.write_str("pow2(n)"),
            SeqFamily::Identity => f.write_str("n"),
            SeqFamily::Affine(base, c) => write!(f, "{base} + {c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexDomain {
    /// Indices that have a binary digit form.
    L,
    /// Finite naturals.
    N,
    /// All of M.
    M,
}

impl fmt::Display for IndexDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexDomain::L => "L",
            IndexDomain::N => "N",
            IndexDomain::M => "M",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LimitResult {
    Value(MNumber),
    CardK,
    NoLimit,
    /// What lies beyond M; not a number.
    Apeiron,
}

fn unsupported(f: &SeqFamily, d: IndexDomain) -> Error {
    Error::UnsupportedLimit {
        family: f.to_string(),
        domain: d.to_string(),
    }
}

pub fn eval_limit(f: &SeqFamily, d: IndexDomain) -> Result<LimitResult> {
    use IndexDomain::*;
    match (f, d) {
        (SeqFamily::OnesRun, L) => Ok(LimitResult::Value(MNumber::w(0))),
        (SeqFamily::Pow2, L) => eval_limit(&SeqFamily::OnesRun.shifted(1u32), L),
        (SeqFamily::Identity, N) => Ok(LimitResult::NoLimit),
        (SeqFamily::Affine(base, c), d) => match eval_limit(base, d)? {
            LimitResult::Value(x) => Ok(LimitResult::Value(element::add_fin(&x, c))),
            LimitResult::NoLimit => Ok(LimitResult::NoLimit),
            _ => Err(unsupported(f, d)),
        },
        _ => Err(unsupported(f, d)),
    }
}

pub fn eval_xtr_limit(f: &SeqFamily, d: IndexDomain) -> Result<LimitResult> {
    match (f, d) {
        (SeqFamily::Identity, IndexDomain::N) => Ok(LimitResult::CardK),
        (SeqFamily::Identity, IndexDomain::M) => Ok(LimitResult::Apeiron),
        _ => Err(unsupported(f, d)),
    }
}

/// Terms `1..=upto` of `f`.
pub fn prefix_table(f: &SeqFamily, upto: u64) -> Result<Vec<MNumber>> {
    if upto == 0 || upto > MAX_PREFIX {
        return Err(Error::BoundExceeded {
            requested: upto,
            max: MAX_PREFIX,
        });
    }
    Ok((1..=upto).map(|n| MNumber::Fin(f.term(n))).collect())
}

/// Binary rows, right-aligned so equal digit positions line up.
pub fn render_prefix_binary(terms: &[MNumber]) -> Vec<String> {
    let rendered: Vec<String> = terms
        .iter()
        .map(|t| match t {
            MNumber::Fin(n) => n.to_str_radix(2),
            other => other.to_string(),
        })
        .collect();
    let width = rendered.iter().map(String::len).max().unwrap_or(0);
    rendered.into_iter().map(|r| format!("{r:>width$}")).collect()
}
