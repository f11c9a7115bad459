//! Row-increasing two-row arrays whose entries partition `{1, ..., N}`:
//! the common domain of both bijections.
//!
//! In standard mode both rows have length `n` (`N = 2n`); in remark mode the
//! top row has length `n + 1` and the bottom row length `n` (`N = 2n + 1`).
//! The mode is always inferred from the row lengths.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` [`enumerate_arrays`] accepts without an explicit bound.
pub const DEFAULT_ARRAY_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Rows of length `(n, n)`.
    Standard,
    /// Rows of length `(n + 1, n)`.
    Remark,
}

impl Mode {
    /// Length of the top row for a given `n`.
    pub fn top_len(self, n: usize) -> usize {
        match self {
            Mode::Standard => n,
            Mode::Remark => n + 1,
        }
    }

    /// Size of the ground set `{1..N}`.
    pub fn ground(self, n: usize) -> usize {
        self.top_len(n) + n
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Standard => "standard",
            Mode::Remark => "remark",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Mode::Standard),
            "remark" => Ok(Mode::Remark),
            other => Err(Error::invalid(
                "mode",
                format!("expected `standard` or `remark`, got {other:?}"),
            )),
        }
    }
}

/// Two strictly increasing rows jointly partitioning `{1, ..., top.len() + bottom.len()}`.
///
/// JSON: `{"rows": [[2,4,8,9,10],[1,3,5,6,7]]}`, top row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ArrayRepr", into = "ArrayRepr")]
pub struct ArrayPair {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrayRepr {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<ArrayRepr> for ArrayPair {
    type Error = Error;

    fn try_from(repr: ArrayRepr) -> Result<Self> {
        let count = repr.rows.len();
        let Ok([top, bottom]) = <[Vec<usize>; 2]>::try_from(repr.rows) else {
            return Err(Error::invalid(
                "rows",
                format!("expected exactly 2 rows, got {count}"),
            ));
        };
        ArrayPair::new(top, bottom)
    }
}

impl From<ArrayPair> for ArrayRepr {
    fn from(a: ArrayPair) -> Self {
        ArrayRepr {
            rows: vec![a.top, a.bottom],
        }
    }
}

/// Checks that `rows` are strictly increasing and together hold each of
/// `1..=N` exactly once. Paths are reported as `rows[i][j]`.
pub(crate) fn check_rows(rows: [&[usize]; 2]) -> Result<()> {
    let ground: usize = rows.iter().map(|r| r.len()).sum();
    let mut seen = vec![false; ground + 1];
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if j > 0 && row[j - 1] >= x {
                return Err(Error::invalid(
                    format!("rows[{i}][{j}]"),
                    format!("row not strictly increasing ({} then {x})", row[j - 1]),
                ));
            }
            if x == 0 || x > ground {
                return Err(Error::invalid(
                    format!("rows[{i}][{j}]"),
                    format!("entry {x} outside 1..={ground}"),
                ));
            }
            if seen[x] {
                return Err(Error::invalid(
                    format!("rows[{i}][{j}]"),
                    format!("entry {x} repeated"),
                ));
            }
            seen[x] = true;
        }
    }
    Ok(())
}

impl ArrayPair {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() && top.len() != bottom.len() + 1 {
            return Err(Error::invalid(
                "rows",
                format!(
                    "row lengths ({}, {}) must be (n, n) or (n + 1, n)",
                    top.len(),
                    bottom.len()
                ),
            ));
        }
        check_rows([&top, &bottom])?;
        Ok(ArrayPair { top, bottom })
    }

    /// Rows already known to satisfy every invariant.
    pub(crate) fn from_rows_unchecked(top: Vec<usize>, bottom: Vec<usize>) -> Self {
        debug_assert!(ArrayPair::new(top.clone(), bottom.clone()).is_ok());
        ArrayPair { top, bottom }
    }

    /// Builds the array whose top row is `top`; the bottom row is the
    /// complement in `1..=ground`.
    pub fn from_top(top: Vec<usize>, ground: usize) -> Result<Self> {
        let mut in_top = vec![false; ground + 1];
        for &x in &top {
            if x == 0 || x > ground {
                return Err(Error::invalid(
                    "rows[0]",
                    format!("entry {x} outside 1..={ground}"),
                ));
            }
            in_top[x] = true;
        }
        let bottom = (1..=ground).filter(|&x| !in_top[x]).collect();
        ArrayPair::new(top, bottom)
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn into_rows(self) -> (Vec<usize>, Vec<usize>) {
        (self.top, self.bottom)
    }

    /// The bottom row length.
    pub fn n(&self) -> usize {
        self.bottom.len()
    }

    pub fn ground(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn mode(&self) -> Mode {
        if self.top.len() == self.bottom.len() {
            Mode::Standard
        } else {
            Mode::Remark
        }
    }
}

impl fmt::Display for ArrayPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[usize]| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})/({})", join(&self.top), join(&self.bottom))
    }
}

/// `C(n, k)`. Panics on overflow of `u64`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Number of arrays for `n` in `mode`: `C(2n, n)` or `C(2n+1, n+1)`.
pub fn array_count(n: usize, mode: Mode) -> u64 {
    binomial(mode.ground(n), mode.top_len(n))
}

/// All arrays for `n` in `mode`, ordered lexicographically by top row.
pub fn enumerate_arrays(n: usize, mode: Mode) -> Result<Vec<ArrayPair>> {
    enumerate_arrays_bounded(n, mode, DEFAULT_ARRAY_BOUND)
}

pub fn enumerate_arrays_bounded(n: usize, mode: Mode, bound: usize) -> Result<Vec<ArrayPair>> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    Ok(Arrays::new(n, mode).collect())
}

/// Lexicographic iterator over the arrays of one `(n, mode)`, optionally
/// restricted to a range of ranks. Disjoint rank ranges yield disjoint
/// slices of the full sequence, so a range split can be processed in
/// parallel.
#[derive(Clone, Debug)]
pub struct Arrays {
    ground: usize,
    /// Current top row; `None` once exhausted.
    current: Option<Vec<usize>>,
    remaining: u64,
}

impl Arrays {
    pub fn new(n: usize, mode: Mode) -> Self {
        Arrays::range(n, mode, 0..array_count(n, mode))
    }

    /// Arrays with ranks in `ranks` (clamped to the total count).
    pub fn range(n: usize, mode: Mode, ranks: Range<u64>) -> Self {
        let ground = mode.ground(n);
        let size = mode.top_len(n);
        let total = array_count(n, mode);
        let end = ranks.end.min(total);
        let start = ranks.start.min(end);
        let current = (start < end).then(|| unrank(ground, size, start));
        Arrays {
            ground,
            current,
            remaining: end - start,
        }
    }
}

impl Iterator for Arrays {
    type Item = ArrayPair;

    fn next(&mut self) -> Option<ArrayPair> {
        if self.remaining == 0 {
            return None;
        }
        let top = self.current.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            self.current = next_subset(&top, self.ground);
        }
        let mut in_top = vec![false; self.ground + 1];
        for &x in &top {
            in_top[x] = true;
        }
        let bottom = (1..=self.ground).filter(|&x| !in_top[x]).collect();
        Some(ArrayPair::from_rows_unchecked(top, bottom))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Lexicographic successor of a `size`-subset of `1..=ground`.
fn next_subset(subset: &[usize], ground: usize) -> Option<Vec<usize>> {
    let size = subset.len();
    let i = (0..size)
        .rev()
        .find(|&i| subset[i] < ground - size + i + 1)?;
    let mut next = subset.to_vec();
    next[i] += 1;
    for j in i + 1..size {
        next[j] = next[j - 1] + 1;
    }
    Some(next)
}

/// The `rank`-th (0-based, lexicographic) `size`-subset of `1..=ground`.
fn unrank(ground: usize, size: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(size);
    let mut x = 1;
    for i in 0..size {
        loop {
            // Subsets that put `x` at position `i`.
            let with_x = binomial(ground - x, size - i - 1);
            if rank < with_x {
                break;
            }
            rank -= with_x;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Splits `0..total` into at most `shards` contiguous, non-empty ranges.
pub fn shard_ranges(total: u64, shards: usize) -> Vec<Range<u64>> {
    let shards = (shards.max(1) as u64).min(total.max(1));
    let base = total / shards;
    let extra = total % shards;
    let mut start = 0;
    (0..shards)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .filter(|r| !r.is_empty())
        .collect()
}
