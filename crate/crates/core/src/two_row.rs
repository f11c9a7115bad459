//! Arrays to standard tableaux with at most two rows, by repeated pivot
//! swaps, and the inverse process.
//!
//! A state is a pair of strictly increasing rows `c` (length `r`) over `d`
//! (length `s <= r`). The pivot is the smallest 1-based column `i <= s` with
//! `c_i > d_i`; a state without a pivot is standard. A forward step at pivot
//! `i` produces
//!
//! ```text
//! d_1 .. d_{i-1} d_i c_i c_{i+1} .. c_r
//! c_1 .. c_{i-1} d_{i+1} .. d_s
//! ```
//!
//! In the produced state the first `i - 1` columns have top above bottom and
//! column `i` (if present) has top below bottom, which is how
//! [`TwoRowState::inverse_step`] recovers the pivot.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::arrays::{check_rows, ArrayPair};
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// JSON: `{"rows": [[...],[...]]}`; the bottom row may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StateRepr", into = "StateRepr")]
pub struct TwoRowState {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateRepr {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<StateRepr> for TwoRowState {
    type Error = Error;

    fn try_from(repr: StateRepr) -> Result<Self> {
        let count = repr.rows.len();
        let Ok([top, bottom]) = <[Vec<usize>; 2]>::try_from(repr.rows) else {
            return Err(Error::invalid(
                "rows",
                format!("expected exactly 2 rows, got {count}"),
            ));
        };
        TwoRowState::new(top, bottom)
    }
}

impl From<TwoRowState> for StateRepr {
    fn from(s: TwoRowState) -> Self {
        StateRepr {
            rows: vec![s.top, s.bottom],
        }
    }
}

impl From<&ArrayPair> for TwoRowState {
    fn from(a: &ArrayPair) -> Self {
        TwoRowState {
            top: a.top().to_vec(),
            bottom: a.bottom().to_vec(),
        }
    }
}

impl TwoRowState {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if bottom.len() > top.len() {
            return Err(Error::invalid(
                "rows",
                format!(
                    "bottom row ({}) longer than top row ({})",
                    bottom.len(),
                    top.len()
                ),
            ));
        }
        check_rows([&top, &bottom])?;
        Ok(TwoRowState { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// The 1-based pivot column, or `None` if the state is standard.
    pub fn pivot(&self) -> Option<usize> {
        self.top
            .iter()
            .zip(&self.bottom)
            .position(|(c, d)| c > d)
            .map(|j| j + 1)
    }

    /// A state with an empty bottom row is standard.
    pub fn is_standard(&self) -> bool {
        self.pivot().is_none()
    }

    /// One pivot swap. Returns the new state and the 1-based pivot used.
    pub fn forward_step(&self) -> Result<(TwoRowState, usize)> {
        let i = self.pivot().ok_or(Error::AlreadyStandard)?;
        let (c, d) = (&self.top, &self.bottom);
        let mut top = Vec::with_capacity(c.len() + 1);
        top.extend_from_slice(&d[..i]);
        top.extend_from_slice(&c[i - 1..]);
        let mut bottom = Vec::with_capacity(d.len() - 1);
        bottom.extend_from_slice(&c[..i - 1]);
        bottom.extend_from_slice(&d[i..]);
        Ok((TwoRowState { top, bottom }, i))
    }

    /// Undoes one forward step. The pivot is `min{ j <= s : c_j < d_j }`,
    /// or `s + 1` when every column has top above bottom.
    pub fn inverse_step(&self) -> Result<TwoRowState> {
        let (c, d) = (&self.top, &self.bottom);
        if c.len() < d.len() + 2 {
            return Err(Error::NotInImage(format!(
                "row lengths ({}, {}) cannot follow a forward step",
                c.len(),
                d.len()
            )));
        }
        let i = c
            .iter()
            .zip(d)
            .position(|(c, d)| c < d)
            .map_or(d.len() + 1, |j| j + 1);
        let mut top = Vec::with_capacity(c.len() - 1);
        top.extend_from_slice(&d[..i - 1]);
        top.extend_from_slice(&c[i..]);
        let mut bottom = Vec::with_capacity(d.len() + 1);
        bottom.extend_from_slice(&c[..i]);
        bottom.extend_from_slice(&d[i - 1..]);
        let previous =
            TwoRowState::new(top, bottom).map_err(|e| Error::NotInImage(e.to_string()))?;
        debug_assert_eq!(previous.forward_step().ok(), Some((self.clone(), i)));
        Ok(previous)
    }

    /// The state as a tableau, dropping an empty bottom row. Only
    /// meaningful for standard states.
    pub fn to_tableau(&self) -> Tableau {
        let mut rows = Vec::with_capacity(2);
        if !self.top.is_empty() {
            rows.push(self.top.clone());
        }
        if !self.bottom.is_empty() {
            rows.push(self.bottom.clone());
        }
        Tableau::from_rows_unchecked(rows)
    }
}

impl fmt::Display for TwoRowState {
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

/// The states visited by the forward process, from the input array to the
/// final standard state, with the pivot of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTrace {
    states: Vec<TwoRowState>,
    pivots: Vec<usize>,
}

impl BijectionTrace {
    pub fn states(&self) -> &[TwoRowState] {
        &self.states
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn steps(&self) -> usize {
        self.pivots.len()
    }

    pub fn final_state(&self) -> &TwoRowState {
        self.states
            .last()
            .expect("a trace holds at least the input")
    }
}

/// JSON: `{"steps": [{"pivot": i, "state": S}, ...], "final": Tableau}` where
/// each step records the state the pivot is applied to.
impl Serialize for BijectionTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Step<'a> {
            pivot: usize,
            state: &'a TwoRowState,
        }
        let steps: Vec<Step> = self
            .pivots
            .iter()
            .zip(&self.states)
            .map(|(&pivot, state)| Step { pivot, state })
            .collect();
        let mut s = serializer.serialize_struct("BijectionTrace", 2)?;
        s.serialize_field("steps", &steps)?;
        s.serialize_field("final", &self.final_state().to_tableau())?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardOutcome {
    pub tableau: Tableau,
    pub steps: usize,
    pub trace: Option<BijectionTrace>,
}

/// Iterates forward steps from `array` until the state is standard. The
/// trace is only recorded when `record` is set.
pub fn run_forward(array: &ArrayPair, record: bool) -> Result<ForwardOutcome> {
    let budget = array.n();
    let mut state = TwoRowState::from(array);
    let mut trace = record.then(|| BijectionTrace {
        states: vec![state.clone()],
        pivots: Vec::new(),
    });
    let mut steps = 0;
    while !state.is_standard() {
        if steps == budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        let (next, pivot) = state.forward_step()?;
        steps += 1;
        if let Some(t) = trace.as_mut() {
            t.states.push(next.clone());
            t.pivots.push(pivot);
        }
        state = next;
    }
    Ok(ForwardOutcome {
        tableau: state.to_tableau(),
        steps,
        trace,
    })
}

pub fn to_two_row_syt(array: &ArrayPair) -> Result<Tableau> {
    run_forward(array, false).map(|o| o.tableau)
}

pub fn trace_two_row(array: &ArrayPair) -> Result<BijectionTrace> {
    run_forward(array, true).map(|o| o.trace.expect("trace requested"))
}

/// Inverse of [`to_two_row_syt`]: applies inverse steps until the top row
/// has length `ceil(N / 2)`.
pub fn from_two_row_syt(tableau: &Tableau) -> Result<ArrayPair> {
    if !tableau.is_standard() {
        return Err(Error::invalid("rows", "tableau is not standard"));
    }
    if tableau.rows().len() > 2 {
        return Err(Error::invalid(
            "rows",
            format!("expected at most 2 rows, got {}", tableau.rows().len()),
        ));
    }
    let ground = tableau.weight();
    let target = ground.div_ceil(2);
    let mut state = TwoRowState {
        top: tableau.row(0).to_vec(),
        bottom: tableau.row(1).to_vec(),
    };
    while state.top.len() > target {
        state = state.inverse_step()?;
    }
    let (top, bottom) = (state.top, state.bottom);
    ArrayPair::new(top, bottom)
}
