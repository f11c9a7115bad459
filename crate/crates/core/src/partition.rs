//! Integer partitions and the `(k, l)`-hook families `H(k, l; n)`.
//!
//! A [`Partition`] is always valid once constructed: its parts are positive
//! and weakly decreasing. The empty partition is the unique partition of 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Serialized as a bare JSON array, e.g. `[4,3,2]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::invalid(format!("[{i}]"), "parts must be positive"));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::invalid(
                format!("[{}]", i + 1),
                format!(
                    "part {} exceeds the preceding part {}",
                    parts[i + 1],
                    parts[i]
                ),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(arm + 1, 1^leg)`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = vec![arm + 1];
        parts.resize(leg + 1, 1);
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part (and for `i == 0`).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ^{+1}`: the first part incremented. The empty partition maps to `(1)`.
    pub fn plus_one(&self) -> Partition {
        let mut parts = self.0.clone();
        match parts.first_mut() {
            Some(first) => *first += 1,
            None => parts.push(1),
        }
        Partition(parts)
    }

    /// The transposed shape: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated part list such as `4,3,2`. The empty string
/// (or `()`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::invalid(format!("[{i}]"), format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn partition_of(parts: &[usize]) -> Result<Partition> {
    Partition::new(parts.to_vec())
}

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            current.push(p);
            extend(remaining - p, p, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// `H(k, l; n)`: partitions of `n` whose `(k+1)`-th part is at most `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookFamily {
    pub k: usize,
    pub l: usize,
    pub n: usize,
}

impl HookFamily {
    pub fn new(k: usize, l: usize, n: usize) -> Self {
        HookFamily { k, l, n }
    }

    /// `H(1, 1; n)`, the hook shapes `(a+1, 1^b)` of weight `n`.
    pub fn hooks(n: usize) -> Self {
        HookFamily::new(1, 1, n)
    }

    /// `H(2, 0; n)`, shapes of weight `n` with at most two rows.
    pub fn two_row(n: usize) -> Self {
        HookFamily::new(2, 0, n)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.weight() == self.n && lambda.part(self.k + 1) <= self.l
    }

    pub fn partitions(&self) -> Vec<Partition> {
        partitions_of(self.n)
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }
}

impl fmt::Display for HookFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{};{})", self.k, self.l, self.n)
    }
}

pub fn in_hook(lambda: &Partition, family: &HookFamily) -> bool {
    family.contains(lambda)
}

pub fn hook_partitions(family: &HookFamily) -> Vec<Partition> {
    family.partitions()
}
