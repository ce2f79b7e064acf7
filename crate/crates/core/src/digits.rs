//! Binary digit patterns `…f₃f₂f₁`, lowest digit `f₁` on the right.
//!
//! Two families are representable: patterns with finitely many ones (the
//! finite naturals) and patterns with finitely many zeros (`w` and the
//! predecessors `w-m`). Digit positions are 1-based.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number::MNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Support {
    /// `positions` lists the ones; every other digit is 0.
    Finite,
    /// `positions` lists the zeros; every other digit is 1.
    CoFinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitForm {
    kind: Support,
    positions: BTreeSet<u64>,
}

impl DigitForm {
    pub fn new(kind: Support, positions: impl IntoIterator<Item = u64>) -> Result<Self> {
        let positions: BTreeSet<u64> = positions.into_iter().collect();
        if positions.contains(&0) {
            return Err(Error::Precondition("digit positions start at 1".into()));
        }
        Ok(DigitForm { kind, positions })
    }

    pub fn finite(ones: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(Support::Finite, ones)
    }

    pub fn co_finite(zeros: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(Support::CoFinite, zeros)
    }

    pub fn kind(&self) -> Support {
        self.kind
    }

    pub fn positions(&self) -> &BTreeSet<u64> {
        &self.positions
    }

    /// Digit `f_i`; `i` is 1-based.
    pub fn digit(&self, i: u64) -> bool {
        let listed = self.positions.contains(&i);
        match self.kind {
            Support::Finite => listed,
            Support::CoFinite => !listed,
        }
    }

    /// Low `len` digits as a number, i.e. the value of the truncation modulo `2^len`.
    pub fn truncate(&self, len: u64) -> BigUint {
        let mut out = BigUint::zero();
        for i in 1..=len {
            if self.digit(i) {
                out.set_bit(i - 1, true);
            }
        }
        out
    }

    /// Text rendering, lowest digit rightmost. Co-finite patterns are prefixed
    /// with `…` to stand for the unending run of ones; finite patterns are
    /// zero-padded to `width`. Neither is cut below its highest listed position.
    pub fn render(&self, width: usize) -> String {
        let top = self.positions.iter().next_back().copied().unwrap_or(0) as usize;
        let len = width.max(top).max(1);
        let body: String = (1..=len as u64)
            .rev()
            .map(|i| if self.digit(i) { '1' } else { '0' })
            .collect();
        match self.kind {
            Support::Finite => body,
            Support::CoFinite => format!("…{body}"),
        }
    }
}

impl fmt::Display for DigitForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(0))
    }
}

/// 1-based positions of the set bits of `n`.
fn set_bits(n: &BigUint) -> impl Iterator<Item = u64> + '_ {
    n.iter_u64_digits().enumerate().flat_map(|(limb, mut word)| {
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as u64;
            word &= word - 1;
            Some(limb as u64 * 64 + b + 1)
        })
    })
}

fn weight(positions: &BTreeSet<u64>) -> BigUint {
    let mut out = BigUint::zero();
    for &i in positions {
        out.set_bit(i - 1, true);
    }
    out
}

pub fn to_digits(x: &MNumber) -> Result<DigitForm> {
    match x {
        MNumber::Fin(n) => Ok(DigitForm {
            kind: Support::Finite,
            positions: set_bits(n).collect(),
        }),
        MNumber::W(k) if !k.is_positive() => {
            let below = k.magnitude();
            Ok(DigitForm {
                kind: Support::CoFinite,
                positions: set_bits(below).collect(),
            })
        }
        _ => Err(Error::NotRepresentable(x.to_string())),
    }
}

pub fn from_digits(d: &DigitForm) -> MNumber {
    let w = weight(&d.positions);
    match d.kind {
        Support::Finite => MNumber::Fin(w),
        Support::CoFinite => MNumber::W(-BigInt::from(w)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Adds one to a little-endian truncation, dropping the final carry.
    fn increment(bits: &mut [bool]) {
        for b in bits.iter_mut() {
            if *b {
                *b = false;
            } else {
                *b = true;
                return;
            }
        }
    }

    fn low_bits(d: &DigitForm, len: u64) -> Vec<bool> {
        (1..=len).map(|i| d.digit(i)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(to_digits(&MNumber::fin(5u32)).unwrap(), DigitForm::finite([1, 3]).unwrap());
        assert_eq!(to_digits(&MNumber::w(0)).unwrap(), DigitForm::co_finite([]).unwrap());
        assert_eq!(to_digits(&MNumber::w(-3)).unwrap(), DigitForm::co_finite([1, 2]).unwrap());
        assert_eq!(from_digits(&DigitForm::finite([]).unwrap()), MNumber::zero());
        assert_eq!(from_digits(&DigitForm::co_finite([]).unwrap()), MNumber::w(0));
        assert_eq!(from_digits(&DigitForm::co_finite([2]).unwrap()), MNumber::w(-2));
    }

    #[test]
    fn successor_of_all_ones_leaves_the_form() {
        assert_eq!(to_digits(&MNumber::w(1)), Err(Error::NotRepresentable("w_1".into())));
        assert!(to_digits(&MNumber::lmk(1, 0)).is_err());
    }

    #[test]
    fn incrementing_truncations_reaches_all_ones() {
        // w-1: zeros at {1}; one increment gives all ones on every truncation.
        let d = to_digits(&MNumber::w(-1)).unwrap();
        for len in 2..40 {
            let mut bits = low_bits(&d, len);
            increment(&mut bits);
            assert!(bits.iter().all(|&b| b), "len {len}");
        }
        // w-3: zeros at {1,2}; three increments give all ones.
        let d = to_digits(&MNumber::w(-3)).unwrap();
        for len in 3..40 {
            let mut bits = low_bits(&d, len);
            for _ in 0..3 {
                increment(&mut bits);
            }
            assert!(bits.iter().all(|&b| b), "len {len}");
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(to_digits(&MNumber::w(-2)).unwrap().render(5), "…11101");
        assert_eq!(to_digits(&MNumber::fin(5u32)).unwrap().render(8), "00000101");
        assert_eq!(to_digits(&MNumber::fin(300u32)).unwrap().render(4), "100101100");
        assert_eq!(to_digits(&MNumber::w(0)).unwrap().render(4), "…1111");
        assert_eq!(to_digits(&MNumber::zero()).unwrap().render(0), "0");
    }

    #[test]
    fn rejects_position_zero() {
        assert!(DigitForm::finite([0, 1]).is_err());
    }
}
