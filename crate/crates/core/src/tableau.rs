//! Young tableaux stored row-major as ragged rows, standardness checks,
//! exhaustive enumeration of standard Young tableaux, and `f^λ`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest weight [`enumerate_syt`] will enumerate without an explicit bound.
pub const DEFAULT_SYT_BOUND: usize = 12;

/// A filling of a Young diagram by positive integers.
///
/// The shape is derived from the row lengths. Entries are not required to
/// be standard; see [`Tableau::is_standard`].
///
/// JSON: `{"rows": [[1,2,4,6],[3,5,7],[8,9]]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauRepr {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        Tableau::new(repr.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { rows: t.rows }
    }
}

impl Tableau {
    /// Validates the shape: rows non-empty with weakly decreasing lengths,
    /// entries positive.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::invalid(format!("rows[{i}]"), "empty row"));
            }
            if let Some(j) = row.iter().position(|&x| x == 0) {
                return Err(Error::invalid(
                    format!("rows[{i}][{j}]"),
                    "entries must be positive",
                ));
            }
        }
        if let Some(i) = rows.windows(2).position(|w| w[0].len() < w[1].len()) {
            return Err(Error::invalid(
                format!("rows[{}]", i + 1),
                format!(
                    "row of length {} is longer than the row above it ({})",
                    rows[i + 1].len(),
                    rows[i].len()
                ),
            ));
        }
        Ok(Tableau { rows })
    }

    /// Rows already known to form a valid shape.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok());
        Tableau { rows }
    }

    /// A hook-shaped filling: `row` across the top, then `leg` down the first
    /// column below the corner `row[0]`.
    pub(crate) fn hook(row: Vec<usize>, leg: Vec<usize>) -> Self {
        let mut rows = Vec::with_capacity(leg.len() + 1);
        rows.push(row);
        rows.extend(leg.into_iter().map(|x| vec![x]));
        Tableau::from_rows_unchecked(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Row `i` (0-based); empty past the last row.
    pub fn row(&self, i: usize) -> &[usize] {
        self.rows.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Column `j` (0-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .map_while(|row| row.get(j).copied())
            .collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths weakly decrease by construction")
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// True iff the entries are exactly `1..=n` with every row and every
    /// column strictly increasing.
    pub fn is_standard(&self) -> bool {
        let n = self.weight();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        let rows_increase = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let columns_increase = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        rows_increase && columns_increase
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn is_standard(t: &Tableau) -> bool {
    t.is_standard()
}

/// All standard Young tableaux of shape `shape`, with the default bound.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_syt_bounded(shape, DEFAULT_SYT_BOUND)
}

/// All standard Young tableaux of shape `shape`.
///
/// Entries are placed in order `1, 2, ..., n`; at each value the candidate
/// rows are tried top to bottom, so the output is lexicographic in the row
/// index sequence of `1..=n`.
pub fn enumerate_syt_bounded(shape: &Partition, bound: usize) -> Result<Vec<Tableau>> {
    let n = shape.weight();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }

    fn fill(
        next: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                fill(next + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }

    let parts = shape.parts();
    let mut rows = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fill(1, n, parts, &mut rows, &mut out);
    Ok(out)
}

/// `f^λ`, by the hook length formula `n! / Π h(c)`.
pub fn count_syt(shape: &Partition) -> BigUint {
    let parts = shape.parts();
    let columns = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = columns.parts()[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    let factorial = (1..=shape.weight()).fold(BigUint::one(), |acc, k| acc * k);
    factorial / hooks
}
