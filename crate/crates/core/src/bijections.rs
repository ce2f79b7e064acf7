//! Executable one-to-one correspondences with N.
//!
//! Each enumerator maps a position `0, 1, 2, …` to a symbolic token. Sets like
//! `{K, K-1, K-2, …, 2, 1, 0}` are enumerated from both ends at once, so every
//! token is either counted from the bottom ([`StreamToken::Bottom`]) or from the
//! top ([`StreamToken::Top`], with `Top(_, 0)` standing for `K` itself).

use std::fmt;
use std::str::FromStr;

use num_integer::Roots;

use crate::card::SetDescriptor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StreamToken {
    Bottom(String, u64),
    Top(String, u64),
}

impl StreamToken {
    pub fn bottom(label: &str, i: u64) -> Self {
        StreamToken::Bottom(label.to_string(), i)
    }

    pub fn top(label: &str, j: u64) -> Self {
        StreamToken::Top(label.to_string(), j)
    }
}

impl fmt::Display for StreamToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamToken::Bottom(label, i) => write!(f, "{label}_{i}"),
            StreamToken::Top(label, 0) => write!(f, "{label}_K"),
            StreamToken::Top(label, j) => write!(f, "{label}_K-{j}"),
        }
    }
}

/// `{a_1, …, a_n} ∪ {K, K-1, …, 1, 0}`: the `a`s first, then the two ends of
/// the second set alternately, `K, 0, K-1, 1, …`.
pub fn union_interleave_fin(n: u64, idx: u64) -> StreamToken {
    if idx < n {
        return StreamToken::bottom("a", idx + 1);
    }
    let t = idx - n;
    if t.is_multiple_of(2) {
        StreamToken::top("B", t / 2)
    } else {
        StreamToken::bottom("B", t / 2)
    }
}

/// `{K, K-1, …, 1, 0}` minus its top `n`: top and bottom alternately,
/// starting at `K-(n-1)` and walking down.
pub fn diff_interleave(n: u64, idx: u64) -> StreamToken {
    if idx.is_multiple_of(2) {
        StreamToken::top("A", n.saturating_sub(1) + idx / 2)
    } else {
        StreamToken::bottom("A", idx / 2)
    }
}

/// `{K, …, 1, 0} ∪ {b_1, …, b_K}`: both sets from both ends, period four.
pub fn union_interleave_kk(idx: u64) -> StreamToken {
    let round = idx / 4;
    match idx % 4 {
        0 => StreamToken::top("A", round),
        1 => StreamToken::bottom("A", round),
        2 => StreamToken::top("b", round),
        _ => StreamToken::bottom("b", round),
    }
}

/// Cell `(i, j)` of the infinite grid, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairIndex {
    i: u64,
    j: u64,
}

impl PairIndex {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::Precondition(format!("grid cell ({i},{j}) is 1-based")));
        }
        Ok(PairIndex { i, j })
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Zigzag diagonal enumeration:
/// `(1,1), (1,2), (2,1), (3,1), (2,2), (1,3), (1,4), …`.
///
/// Diagonal `d = i + j - 1` starts at `d(d-1)/2`; even diagonals run with `i`
/// ascending, odd ones with `i` descending.
///
/// Panics if the index does not fit in a `u64`.
pub fn pair_index(p: PairIndex) -> u64 {
    let d = p.i as u128 + p.j as u128 - 1;
    let base = d * (d - 1) / 2;
    let within = if d.is_multiple_of(2) { p.i as u128 - 1 } else { d - p.i as u128 };
    u64::try_from(base + within).expect("pair index exceeds u64")
}

pub fn pair_unindex(m: u64) -> PairIndex {
    let m = m as u128;
    // Largest k with k(k+1)/2 <= m; the cell sits on diagonal k + 1.
    let mut k = ((8 * m + 1).sqrt() - 1) / 2;
    while k * (k + 1) / 2 > m {
        k -= 1;
    }
    while (k + 1) * (k + 2) / 2 <= m {
        k += 1;
    }
    let d = k + 1;
    let within = m - k * (k + 1) / 2;
    let i = if d.is_multiple_of(2) { within + 1 } else { d - within };
    let j = d + 1 - i;
    PairIndex {
        i: i as u64,
        j: j as u64,
    }
}

/// One element of a layout whose separators come from `B` and whose gaps come from `C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slot {
    C(StreamToken),
    B(StreamToken),
}

/// Pairs each maximal run of `C`-tokens (a gap between `B`-tokens) with
/// `0, 1, 2, …` in layout order, returning at most `upto` blocks.
///
/// Two `B`-tokens next to each other make the layout malformed. Empty runs
/// before the first or after the last `B`-token are skipped.
pub fn gap_block_enumerate(layout: &[Slot], upto: u64) -> Result<Vec<(Vec<StreamToken>, u64)>> {
    if upto == 0 {
        return Err(Error::Precondition("upto must be positive".into()));
    }
    if let Some(pair) = layout.windows(2).find(|w| matches!(w, [Slot::B(_), Slot::B(_)])) {
        let (Slot::B(a), Slot::B(b)) = (&pair[0], &pair[1]) else {
            unreachable!()
        };
        return Err(Error::MalformedLayout(format!("{a} is immediately followed by {b}")));
    }
    let blocks = layout
        .split(|s| matches!(s, Slot::B(_)))
        .filter(|run| !run.is_empty())
        .map(|run| {
            run.iter()
                .map(|s| match s {
                    Slot::C(t) | Slot::B(t) => t.clone(),
                })
                .collect::<Vec<_>>()
        });
    Ok(blocks.zip(0u64..).take(upto as usize).collect())
}

/// Named enumerators, as exposed by the calculator and the `--dump-enum` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Enumerator {
    /// `K + n`: `union_fin:<n>`.
    UnionFin(u64),
    /// `K - n`: `diff:<n>`.
    Diff(u64),
    /// `K + K`: `union_kk`.
    UnionKK,
    /// `K × K`: `pairs`.
    Pairs,
    /// Gap blocks of a fixed sample layout: `gaps`.
    Gaps,
}

pub const DEFAULT_ENUM_N: u64 = 3;

impl FromStr for Enumerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((name, p)) => {
                let n = p
                    .parse::<u64>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::Precondition(format!("bad enumerator parameter {p:?}")))?;
                (name, Some(n))
            }
            None => (s, None),
        };
        let n = param.unwrap_or(DEFAULT_ENUM_N);
        let e = match name {
            "union_fin" => Enumerator::UnionFin(n),
            "diff" => Enumerator::Diff(n),
            "union_kk" if param.is_none() => Enumerator::UnionKK,
            "pairs" if param.is_none() => Enumerator::Pairs,
            "gaps" if param.is_none() => Enumerator::Gaps,
            _ => {
                return Err(Error::Precondition(format!(
                    "unknown enumerator {s:?} (expected union_fin[:n], diff[:n], union_kk, pairs, gaps)"
                )))
            }
        };
        Ok(e)
    }
}

impl fmt::Display for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Enumerator::UnionFin(n) => write!(f, "union_fin:{n}"),
            Enumerator::Diff(n) => write!(f, "diff:{n}"),
            Enumerator::UnionKK => f.write_str("union_kk"),
            Enumerator::Pairs => f.write_str("pairs"),
            Enumerator::Gaps => f.write_str("gaps"),
        }
    }
}

pub const MAX_ROWS: u64 = 100_000;

/// `c_0, c_5, b_0, c_1, b_1, c_2, c_9, b_2, c_20, c_4, b_3`.
pub fn sample_gap_layout() -> Vec<Slot> {
    let c = |i| Slot::C(StreamToken::bottom("c", i));
    let b = |i| Slot::B(StreamToken::bottom("b", i));
    vec![c(0), c(5), b(0), c(1), b(1), c(2), c(9), b(2), c(20), c(4), b(3)]
}

fn top_name(prefix: &str, j: u64) -> String {
    match j {
        0 => format!("{prefix}K"),
        j => format!("{prefix}K-{j}"),
    }
}

impl Enumerator {
    pub fn token(&self, idx: u64) -> Option<StreamToken> {
        match *self {
            Enumerator::UnionFin(n) => Some(union_interleave_fin(n, idx)),
            Enumerator::Diff(n) => Some(diff_interleave(n, idx)),
            Enumerator::UnionKK => Some(union_interleave_kk(idx)),
            Enumerator::Pairs | Enumerator::Gaps => None,
        }
    }

    /// Display name in the usual notation: `K`, `K-1`, `0`, `a_1`, `b_K`, `b_2`.
    pub fn token_name(&self, token: &StreamToken) -> String {
        match (self, token) {
            (Enumerator::UnionKK, StreamToken::Top(l, j)) if l == "b" => top_name("b_", *j),
            (Enumerator::UnionKK, StreamToken::Bottom(l, i)) if l == "b" => format!("b_{}", i + 1),
            (_, StreamToken::Top(l, j)) if l == "A" || l == "B" => top_name("", *j),
            (_, StreamToken::Bottom(l, i)) if l == "A" || l == "B" => i.to_string(),
            (_, t) => t.to_string(),
        }
    }

    /// First `count` rows as `(name, position)`.
    pub fn rows(&self, count: u64) -> Result<Vec<(String, u64)>> {
        if count > MAX_ROWS {
            return Err(Error::BoundExceeded {
                requested: count,
                max: MAX_ROWS,
            });
        }
        let rows = match self {
            Enumerator::Pairs => (0..count).map(|m| (pair_unindex(m).to_string(), m)).collect(),
            Enumerator::Gaps => {
                if count == 0 {
                    return Ok(Vec::new());
                }
                gap_block_enumerate(&sample_gap_layout(), count)?
                    .into_iter()
                    .map(|(block, k)| {
                        let names: Vec<String> = block.iter().map(|t| t.to_string()).collect();
                        (format!("{{{}}}", names.join(",")), k)
                    })
                    .collect()
            }
            _ => (0..count)
                .map(|idx| (self.token_name(&self.token(idx).expect("token stream")), idx))
                .collect(),
        };
        Ok(rows)
    }

    /// The enumerated set is indexed by all of N.
    pub fn set_descriptor(&self) -> SetDescriptor<StreamToken> {
        SetDescriptor::NIndexedStream
    }
}
