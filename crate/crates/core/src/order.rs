//! Comparison, distance and landmark structure of M.
//!
//! The total order lays M out as
//!
//! ```text
//! 0, 1, 2, …, (…, o_1-1, o_1, o_1+1, …), (…, o_2-1, o_2, o_2+1, …), …, (…, w-1, w, w_1, …)
//! ```
//!
//! Each parenthesised block is a copy of Z and two elements are a finite
//! distance apart exactly when they sit in the same block (or are both finite).

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::element;
use crate::error::{Error, Result};
use crate::number::{MNumber, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    /// Both sides are infinite and equinumerous, but name different numbers.
    EquivalentNotEqual,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Greater => Comparison::Greater,
            Ordering::Equal => Comparison::Equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Distance {
    FiniteDist(BigUint),
    InfiniteDist,
}

/// Position of a block in the layout: finite naturals first, then each
/// landmark class by index, then the `w` class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Block {
    Finite,
    Landmark(u64),
    W,
}

fn block(x: &MNumber) -> Block {
    match x {
        MNumber::Fin(_) => Block::Finite,
        MNumber::Lmk { index, .. } => Block::Landmark(index.get()),
        MNumber::W(_) => Block::W,
    }
}

impl Ord for MNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        block(self).cmp(&block(other)).then_with(|| match (self, other) {
            (MNumber::Fin(a), MNumber::Fin(b)) => a.cmp(b),
            _ => self.offset().cmp(&other.offset()),
        })
    }
}

impl PartialOrd for MNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comparison by size: finite numbers by value, every finite number below
/// every infinite one, and all infinite numbers mutually equivalent.
pub fn cardinal_compare(x: &MNumber, y: &MNumber) -> Comparison {
    match (x, y) {
        (MNumber::Fin(a), MNumber::Fin(b)) => a.cmp(b).into(),
        (MNumber::Fin(_), _) => Comparison::Less,
        (_, MNumber::Fin(_)) => Comparison::Greater,
        _ if x == y => Comparison::Equal,
        _ => Comparison::EquivalentNotEqual,
    }
}

/// Position in the total layout of M. Never `EquivalentNotEqual`.
pub fn structural_compare(x: &MNumber, y: &MNumber) -> Comparison {
    x.cmp(y).into()
}

pub fn distance(x: &MNumber, y: &MNumber) -> Distance {
    match (x, y) {
        (MNumber::Fin(a), MNumber::Fin(b)) => {
            let d = if a >= b { a - b } else { b - a };
            Distance::FiniteDist(d)
        }
        _ if block(x) == block(y) => {
            let d: BigInt = x.offset().unwrap() - y.offset().unwrap();
            Distance::FiniteDist(d.magnitude().clone())
        }
        _ => Distance::InfiniteDist,
    }
}

/// The exponent of `x` inside landmark class `index`.
pub fn z_project(index: u64, x: &MNumber) -> Result<BigInt> {
    match x {
        MNumber::Lmk { index: i, offset } if i.get() == index => Ok(offset.clone()),
        _ => Err(Error::WrongClass {
            index,
            x: x.to_string(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Archimedean {
    /// The least `p` with `p·m > n`.
    Witness(BigUint),
    /// No `p` in `1..=bound` works.
    NoWitnessUpTo(BigUint),
    /// No finite `p` can ever work.
    ProvablyNone,
}

/// Looks for a finite multiple `p·m` exceeding `n`, given `0 < m < n`.
pub fn archimedean_witness(m: &MNumber, n: &MNumber, p_bound: &BigUint) -> Result<Archimedean> {
    if !(MNumber::zero() < *m && m < n) {
        return Err(Error::Precondition(format!(
            "archimedean witness needs 0 < m < n, got m = {m}, n = {n}"
        )));
    }
    match (m, n) {
        (MNumber::Fin(m), MNumber::Fin(n)) => Ok(Archimedean::Witness(n.div_floor(m) + 1u32)),
        // p·m stays finite, and every finite number is below every infinite one.
        (MNumber::Fin(_), _) => Ok(Archimedean::ProvablyNone),
        _ => {
            let mut p = BigUint::one();
            while &p <= p_bound {
                if let Value::Elem(prod) = element::mul(m, &MNumber::Fin(p.clone())) {
                    if prod > *n {
                        return Ok(Archimedean::Witness(p));
                    }
                }
                p += 1u32;
            }
            Ok(Archimedean::NoWitnessUpTo(p_bound.clone()))
        }
    }
}

impl Distance {
    pub fn is_zero(&self) -> bool {
        matches!(self, Distance::FiniteDist(d) if d.is_zero())
    }
}
