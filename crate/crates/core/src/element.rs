//! Arithmetic on individual elements of M.
//!
//! Adding or subtracting a finite amount moves an infinite element along its
//! own class by offset arithmetic (the same as iterating `succ`/`pred`).
//! Anything else involving an infinite operand escalates to the cardinal
//! stratum, where only `K` and `κ` answers exist.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::card;
use crate::error::{Error, Result};
use crate::number::{CardValue, MNumber, Value};

pub fn succ(x: &MNumber) -> MNumber {
    match x {
        MNumber::Fin(n) => MNumber::Fin(n + 1u32),
        _ => shift(x, &BigInt::one()),
    }
}

pub fn pred(x: &MNumber) -> Result<MNumber> {
    match x {
        MNumber::Fin(n) if n.is_zero() => Err(Error::NoPredecessor),
        MNumber::Fin(n) => Ok(MNumber::Fin(n - 1u32)),
        _ => Ok(shift(x, &-BigInt::one())),
    }
}

/// Moves an infinite element `by` steps within its class.
fn shift(x: &MNumber, by: &BigInt) -> MNumber {
    let offset = x.offset().expect("shift on infinite element");
    x.with_offset(offset + by)
}

pub fn add(x: &MNumber, y: &MNumber) -> Value {
    match (x, y) {
        (MNumber::Fin(a), MNumber::Fin(b)) => MNumber::Fin(a + b).into(),
        (inf, MNumber::Fin(n)) | (MNumber::Fin(n), inf) => shift(inf, &BigInt::from(n.clone())).into(),
        _ => CardValue::K.into(),
    }
}

pub fn sub(x: &MNumber, y: &MNumber) -> Result<Value> {
    match (x, y) {
        (MNumber::Fin(a), MNumber::Fin(b)) if a >= b => Ok(MNumber::Fin(a - b).into()),
        (MNumber::Fin(_), _) => Err(Error::UndefinedDifference {
            lhs: x.to_string(),
            rhs: y.to_string(),
        }),
        (inf, MNumber::Fin(n)) => Ok(shift(inf, &-BigInt::from(n.clone())).into()),
        _ => card::card_sub(&CardValue::K, &CardValue::K).map(Value::Card),
    }
}

pub fn mul(x: &MNumber, y: &MNumber) -> Value {
    match (x, y) {
        (MNumber::Fin(a), MNumber::Fin(b)) => MNumber::Fin(a * b).into(),
        (MNumber::Fin(z), _) | (_, MNumber::Fin(z)) if z.is_zero() => MNumber::zero().into(),
        _ => CardValue::K.into(),
    }
}

pub fn div(x: &MNumber, y: &MNumber) -> Result<Value> {
    match (x, y) {
        (_, MNumber::Fin(z)) if z.is_zero() => Err(Error::DivisionByZero { lhs: x.to_string() }),
        (MNumber::Fin(a), MNumber::Fin(b)) => Ok(MNumber::Fin(a.div_floor(b)).into()),
        (MNumber::Fin(_), _) => Err(Error::UndefinedQuotient {
            lhs: x.to_string(),
            rhs: y.to_string(),
        }),
        (_, MNumber::Fin(_)) => Ok(CardValue::K.into()),
        _ => card::card_div(&CardValue::K, &CardValue::K).map(Value::Card),
    }
}

/// `x` shifted up by a finite amount; convenience for callers holding a `BigUint`.
pub fn add_fin(x: &MNumber, n: &BigUint) -> MNumber {
    match add(x, &MNumber::Fin(n.clone())) {
        Value::Elem(e) => e,
        Value::Card(_) => unreachable!("adding a finite amount never escalates"),
    }
}
