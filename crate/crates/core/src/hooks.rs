//! Arrays to ordered pairs of hook-shaped standard tableaux.
//!
//! Let `m = top.len()` and `p = bottom.len()`. The entries of the top row
//! that are at most `m` are shifted up by one and placed after the corner 1
//! in the first row of `first`; the remaining entries of `{1..m+1}` fill its
//! column. The top-row entries above `m` are shifted down by `m - 1` and
//! placed below the corner in the column of `second`, whose row is the
//! complement in `{1..p+1}`.
//!
//! With `k = |top ∩ {1..m}|`, `first` has shape `(k+1, 1^(m-k))` and `second`
//! has shape `(p-m+k+1, 1^(m-k))`. For standard arrays (`p = m = n`) the shapes
//! coincide; for remark arrays (`m = n+1`, `p = n`) the shape of `first` is
//! `λ^{+1}` where `λ ⊢ n+1` is the shape of `second`.

use serde::{Deserialize, Serialize};

use crate::arrays::ArrayPair;
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// JSON: `{"first": Tableau, "second": Tableau}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HookTableauPair {
    pub first: Tableau,
    pub second: Tableau,
}

/// Splits `1..=len` into (`chosen`, complement), both increasing. `chosen`
/// must be a sorted subset.
fn with_complement(chosen: Vec<usize>, len: usize) -> (Vec<usize>, Vec<usize>) {
    let mut marked = vec![false; len + 1];
    for &x in &chosen {
        marked[x] = true;
    }
    let rest = (1..=len).filter(|&x| !marked[x]).collect();
    (chosen, rest)
}

pub fn to_hook_pair(array: &ArrayPair) -> HookTableauPair {
    let m = array.top().len();
    let p = array.bottom().len();
    let (low, high): (Vec<usize>, Vec<usize>) = array.top().iter().partition(|&&x| x <= m);

    let row: Vec<usize> = std::iter::once(1)
        .chain(low.iter().map(|x| x + 1))
        .collect();
    let (row, leg) = with_complement(row, m + 1);
    let first = Tableau::hook(row, leg);

    let column: Vec<usize> = std::iter::once(1)
        .chain(high.iter().map(|x| x + 1 - m))
        .collect();
    let (column, row) = with_complement(column, p + 1);
    let mut row = row;
    row.insert(0, 1);
    let second = Tableau::hook(row, column[1..].to_vec());

    HookTableauPair { first, second }
}

pub fn from_hook_pair(pair: &HookTableauPair) -> Result<ArrayPair> {
    for (name, t) in [("first", &pair.first), ("second", &pair.second)] {
        if t.weight() == 0 {
            return Err(Error::invalid(name, "empty tableau has no corner"));
        }
        if !t.is_standard() {
            return Err(Error::invalid(name, "tableau is not standard"));
        }
        if !t.shape().is_hook() {
            return Err(Error::invalid(
                name,
                format!("shape {} is not a hook", t.shape()),
            ));
        }
    }

    let first_shape = pair.first.shape();
    let second_shape = pair.second.shape();
    let compatible = if pair.first.weight() == pair.second.weight() {
        first_shape == second_shape
    } else {
        first_shape == second_shape.plus_one()
    };
    if !compatible {
        return Err(Error::invalid(
            "",
            format!(
                "shapes {first_shape} and {second_shape} are neither equal nor related by λ ↦ λ^{{+1}}"
            ),
        ));
    }

    let m = pair.first.weight() - 1;
    let p = pair.second.weight() - 1;
    let top: Vec<usize> = pair.first.row(0)[1..]
        .iter()
        .map(|r| r - 1)
        .chain(pair.second.column(0)[1..].iter().map(|c| c + m - 1))
        .collect();
    let array = ArrayPair::from_top(top, m + p).map_err(|e| e.within("reconstructed"))?;
    debug_assert_eq!(&to_hook_pair(&array), pair);
    Ok(array)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::{enumerate_arrays, Mode};
    use crate::partition::Partition;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn a(top: &[usize], bottom: &[usize]) -> ArrayPair {
        ArrayPair::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let pair = to_hook_pair(&a(&[2, 4, 8, 9, 10], &[1, 3, 5, 6, 7]));
        assert_eq!(pair.first.row(0), &[1, 3, 5]);
        assert_eq!(pair.first.column(0), vec![1, 2, 4, 6]);
        assert_eq!(pair.second.column(0), vec![1, 4, 5, 6]);
        assert_eq!(pair.second.row(0), &[1, 2, 3]);
        assert_eq!(pair.first, t(&[&[1, 3, 5], &[2], &[4], &[6]]));
        assert_eq!(pair.second, t(&[&[1, 2, 3], &[4], &[5], &[6]]));
        assert_eq!(
            from_hook_pair(&pair).unwrap(),
            a(&[2, 4, 8, 9, 10], &[1, 3, 5, 6, 7])
        );
    }

    #[test]
    fn n_equals_one() {
        let row = to_hook_pair(&a(&[1], &[2]));
        assert_eq!(row.first, t(&[&[1, 2]]));
        assert_eq!(row.second, t(&[&[1, 2]]));
        assert_eq!(from_hook_pair(&row).unwrap(), a(&[1], &[2]));

        let col = to_hook_pair(&a(&[2], &[1]));
        assert_eq!(col.first, t(&[&[1], &[2]]));
        assert_eq!(col.second, t(&[&[1], &[2]]));
    }

    #[test]
    fn rejects_unequal_shapes() {
        let pair = HookTableauPair {
            first: t(&[&[1, 2, 3], &[4]]),
            second: t(&[&[1, 2], &[3], &[4]]),
        };
        assert!(from_hook_pair(&pair).is_err());

        let not_standard = HookTableauPair {
            first: t(&[&[1, 3], &[2]]),
            second: t(&[&[2, 3], &[1]]),
        };
        assert!(matches!(
            from_hook_pair(&not_standard),
            Err(Error::Invalid { ref path, .. }) if path == "second"
        ));

        let far_apart = HookTableauPair {
            first: t(&[&[1, 2, 3, 4]]),
            second: t(&[&[1, 2]]),
        };
        assert!(from_hook_pair(&far_apart).is_err());

        let not_hooks = HookTableauPair {
            first: t(&[&[1, 2], &[3, 4]]),
            second: t(&[&[1, 2], &[3, 4]]),
        };
        assert!(from_hook_pair(&not_hooks).is_err());
    }

    #[test]
    fn shape_law_and_round_trip() {
        for mode in [Mode::Standard, Mode::Remark] {
            for n in 0..=7 {
                for arr in enumerate_arrays(n, mode).unwrap() {
                    let m = arr.top().len();
                    let k = arr.top().iter().filter(|&&x| x <= m).count();
                    let pair = to_hook_pair(&arr);
                    assert!(pair.first.is_standard() && pair.second.is_standard());
                    assert_eq!(pair.first.shape(), Partition::hook(k, m - k));
                    match mode {
                        Mode::Standard => assert_eq!(pair.second.shape(), pair.first.shape()),
                        Mode::Remark => {
                            assert_eq!(pair.second.weight(), n + 1);
                            assert_eq!(pair.second.shape().plus_one(), pair.first.shape());
                        }
                    }
                    assert_eq!(from_hook_pair(&pair).unwrap(), arr);
                }
            }
        }
    }

    #[test]
    fn remark_smallest_case() {
        let pair = to_hook_pair(&a(&[1], &[]));
        assert_eq!(pair.first, t(&[&[1, 2]]));
        assert_eq!(pair.second, t(&[&[1]]));
        assert_eq!(from_hook_pair(&pair).unwrap(), a(&[1], &[]));
    }
}
