//! Cardinal-stratum arithmetic over [`CardValue`].
//!
//! The table is fixed:
//!
//! | op  | K, n (n ≥ 1) | K, 0 | K, K | K, κ |
//! |-----|--------------|------|------|------|
//! | `+` | K            | K    | K    | K    |
//! | `-` | K            | K    | κ    | κ    |
//! | `×` | K            | 0    | K    | K    |
//! | `÷` | K            | err  | κ    | κ    |
//!
//! Every occurrence of `κ` is a fresh unknown, so `κ - κ` is `κ`, not `0`.

use std::collections::HashSet;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number::CardValue;

use CardValue::{Fin, Kappa, K};

pub fn card_add(a: &CardValue, b: &CardValue) -> CardValue {
    match (a, b) {
        (Fin(x), Fin(y)) => Fin(x + y),
        (K, _) | (_, K) => K,
        (Kappa, _) | (_, Kappa) => Kappa,
    }
}

pub fn card_sub(a: &CardValue, b: &CardValue) -> Result<CardValue> {
    let undefined = || Error::UndefinedDifference {
        lhs: a.to_string(),
        rhs: b.to_string(),
    };
    match (a, b) {
        (Fin(x), Fin(y)) if x >= y => Ok(Fin(x - y)),
        (Fin(_), _) => Err(undefined()),
        (K, Fin(_)) => Ok(K),
        (K, K) | (K, Kappa) => Ok(Kappa),
        (Kappa, Fin(_)) => Ok(Kappa),
        // κ may be finite, and a finite minus K has no value in M.
        (Kappa, K) => Err(undefined()),
        (Kappa, Kappa) => Ok(Kappa),
    }
}

pub fn card_mul(a: &CardValue, b: &CardValue) -> CardValue {
    if a.is_zero() || b.is_zero() {
        return Fin(Zero::zero());
    }
    match (a, b) {
        (Fin(x), Fin(y)) => Fin(x * y),
        // K × κ = K is taken as stated, even though κ = 0 would give 0.
        (K, _) | (_, K) => K,
        (Kappa, _) | (_, Kappa) => Kappa,
    }
}

pub fn card_div(a: &CardValue, b: &CardValue) -> Result<CardValue> {
    if b.is_zero() {
        return Err(Error::DivisionByZero { lhs: a.to_string() });
    }
    let undefined = || Error::UndefinedQuotient {
        lhs: a.to_string(),
        rhs: b.to_string(),
    };
    match (a, b) {
        (Fin(x), Fin(y)) => Ok(Fin(x.div_floor(y))),
        (Fin(_), _) => Err(undefined()),
        (K, Fin(_)) => Ok(K),
        (K, K) | (K, Kappa) => Ok(Kappa),
        (Kappa, Fin(_)) => Ok(Kappa),
        (Kappa, K) => Err(undefined()),
        (Kappa, Kappa) => Ok(Kappa),
    }
}

/// A set whose cardinal is requested: either written out, or the symbolic
/// stream indexed by all of N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDescriptor<T> {
    Explicit(Vec<T>),
    NIndexedStream,
}

pub fn card_of_stream<T>(desc: &SetDescriptor<T>) -> Result<CardValue>
where
    T: Eq + Hash + std::fmt::Debug,
{
    match desc {
        SetDescriptor::NIndexedStream => Ok(K),
        SetDescriptor::Explicit(items) => {
            let mut seen = HashSet::with_capacity(items.len());
            for item in items {
                if !seen.insert(item) {
                    return Err(Error::InvalidSet(format!("{item:?}")));
                }
            }
            Ok(CardValue::fin(items.len()))
        }
    }
}
