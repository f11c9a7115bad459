//! Numeric and exhaustive certification of
//!
//! ```text
//! Σ_{μ ∈ H(1,1;n+1)} (f^μ)² = Σ_{λ ∈ H(2,0;2n)} f^λ
//! ```
//!
//! and of its `(n+1, n)` variant
//!
//! ```text
//! Σ_{μ ∈ H(2,0;2n+1)} f^μ = Σ_{λ ∈ H(1,1;w)} f^λ · f^{λ^{+1}}
//! ```
//!
//! where the hook weight `w` is not assumed: it is resolved numerically
//! among a small set of candidate offsets from `n`.
//!
//! Certification runs both bijections over every array, sharded into
//! disjoint rank ranges on the rayon pool. Each shard produces a
//! [`Partial`]; partials merge by concatenation, and all global checks run
//! on the merged, rank-ordered result, so reports do not depend on the
//! shard count.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrays::{array_count, shard_ranges, ArrayPair, Arrays, Mode};
use crate::error::{Error, Result};
use crate::hooks::{from_hook_pair, to_hook_pair, HookTableauPair};
use crate::partition::{HookFamily, Partition};
use crate::tableau::{count_syt, enumerate_syt_bounded, Tableau};
use crate::two_row::{from_two_row_syt, run_forward};

pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 8;
pub const DEFAULT_REMARK_BOUND: usize = 6;

/// Offsets `w - n` tried when resolving the hook weight of the variant.
pub const REMARK_WEIGHT_OFFSETS: [i64; 4] = [-1, 0, 1, 2];

/// Offset realized by the hook bijection on `(n+1, n)` arrays: the second
/// tableau has weight `n + 1`.
pub const REMARK_BIJECTION_OFFSET: i64 = 1;

/// `(Σ_{μ∈H(1,1;n+1)} (f^μ)², Σ_{λ∈H(2,0;2n)} f^λ)` from hook-length counts.
pub fn identity_sides(n: usize) -> (BigUint, BigUint) {
    let lhs = HookFamily::hooks(n + 1)
        .partitions()
        .iter()
        .map(|mu| {
            let f = count_syt(mu);
            &f * &f
        })
        .sum();
    (lhs, two_row_sum(2 * n))
}

/// `Σ_{λ∈H(2,0;weight)} f^λ`.
pub fn two_row_sum(weight: usize) -> BigUint {
    HookFamily::two_row(weight)
        .partitions()
        .iter()
        .map(count_syt)
        .sum()
}

/// `Σ_{λ∈H(1,1;weight)} f^λ · f^{λ^{+1}}`.
pub fn hook_product_sum(weight: usize) -> BigUint {
    HookFamily::hooks(weight)
        .partitions()
        .iter()
        .map(|lambda| count_syt(lambda) * count_syt(&lambda.plus_one()))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    HookCodomain,
    HookRoundTrip,
    HookInjectivity,
    HookImageCount,
    TwoRowForward,
    TwoRowCodomain,
    TwoRowRoundTrip,
    TwoRowInjectivity,
    TwoRowImageCount,
    WorkedExample,
    Composition,
    Identity,
    Indexing,
}

impl Check {
    fn affects_hooks(self) -> bool {
        matches!(
            self,
            Check::HookCodomain
                | Check::HookRoundTrip
                | Check::HookInjectivity
                | Check::HookImageCount
                | Check::WorkedExample
        )
    }

    fn affects_two_row(self) -> bool {
        matches!(
            self,
            Check::TwoRowForward
                | Check::TwoRowCodomain
                | Check::TwoRowRoundTrip
                | Check::TwoRowInjectivity
                | Check::TwoRowImageCount
                | Check::WorkedExample
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ArrayPair>,
    /// Second preimage, for injectivity failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<ArrayPair>,
    pub detail: String,
}

impl Failure {
    fn new(check: Check, input: Option<&ArrayPair>, detail: impl Into<String>) -> Self {
        Failure {
            check,
            input: input.cloned(),
            other: None,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexingCandidate {
    pub weight_offset: i64,
    pub hook_weight: usize,
    pub sum: u64,
    pub matches: bool,
}

/// Which hook weight makes the variant identity hold at this `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkIndexing {
    pub candidates: Vec<IndexingCandidate>,
    /// Set when exactly one candidate matches.
    pub resolved_offset: Option<i64>,
    pub unique: bool,
    /// The offset realized by the hook bijection is among the matches.
    pub consistent_with_bijection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub mode: Mode,
    pub lhs: u64,
    pub rhs: u64,
    pub array_count: u64,
    pub bijection1_ok: bool,
    pub bijection2_ok: bool,
    pub composition_ok: bool,
    pub step_histogram: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remark_indexing: Option<RemarkIndexing>,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.bijection1_ok
            && self.bijection2_ok
            && self.composition_ok
            && self.lhs == self.rhs
            && self.rhs == self.array_count
            && self.failures.is_empty()
            && self
                .remark_indexing
                .as_ref()
                .is_none_or(|r| r.consistent_with_bijection)
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Largest `n` accepted; defaults per mode when `None`.
    pub max_n: Option<usize>,
    /// Number of rank ranges the arrays are split into.
    pub shards: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            max_n: None,
            shards: rayon::current_num_threads() * 4,
        }
    }
}

pub fn certify(n: usize) -> Result<IdentityReport> {
    certify_with(n, Mode::Standard, &CertifyOptions::default())
}

pub fn certify_remark(n: usize) -> Result<IdentityReport> {
    certify_with(n, Mode::Remark, &CertifyOptions::default())
}

/// What one array contributed.
#[derive(Clone, Debug)]
struct Image {
    array: ArrayPair,
    hook: HookTableauPair,
    two_row: Option<Tableau>,
}

/// Per-shard result. Merging is concatenation, hence associative.
#[derive(Clone, Debug, Default)]
struct Partial {
    images: Vec<Image>,
    failures: Vec<Failure>,
    histogram: BTreeMap<usize, u64>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.images.extend(other.images);
        self.failures.extend(other.failures);
        for (steps, count) in other.histogram {
            *self.histogram.entry(steps).or_default() += count;
        }
        self
    }
}

fn worked_example() -> (ArrayPair, HookTableauPair, Tableau) {
    let array = ArrayPair::new(vec![2, 4, 8, 9, 10], vec![1, 3, 5, 6, 7]).expect("valid");
    let hook = HookTableauPair {
        first: Tableau::new(vec![vec![1, 3, 5], vec![2], vec![4], vec![6]]).expect("valid"),
        second: Tableau::new(vec![vec![1, 2, 3], vec![4], vec![5], vec![6]]).expect("valid"),
    };
    let two_row = Tableau::new(vec![vec![1, 3, 5, 6, 7, 8, 9, 10], vec![2, 4]]).expect("valid");
    (array, hook, two_row)
}

fn check_array(array: &ArrayPair, out: &mut Partial) {
    let m = array.top().len();
    let ground = array.ground();

    let hook = to_hook_pair(array);
    let k = array.top().iter().filter(|&&x| x <= m).count();
    let expected_first = Partition::hook(k, m - k);
    let second_ok = match array.mode() {
        Mode::Standard => hook.second.shape() == expected_first,
        Mode::Remark => hook.second.shape().plus_one() == expected_first,
    };
    if !(hook.first.is_standard()
        && hook.second.is_standard()
        && hook.first.shape() == expected_first
        && second_ok)
    {
        out.failures.push(Failure::new(
            Check::HookCodomain,
            Some(array),
            format!(
                "image {} ; {} has the wrong shape or is not standard",
                hook.first, hook.second
            ),
        ));
    }
    match from_hook_pair(&hook) {
        Ok(back) if &back == array => {}
        Ok(back) => out.failures.push(Failure::new(
            Check::HookRoundTrip,
            Some(array),
            format!("inverse returned {back}"),
        )),
        Err(e) => out.failures.push(Failure::new(
            Check::HookRoundTrip,
            Some(array),
            e.to_string(),
        )),
    }

    let two_row = match run_forward(array, false) {
        Ok(outcome) => {
            *out.histogram.entry(outcome.steps).or_default() += 1;
            let t = outcome.tableau;
            if !(t.is_standard()
                && HookFamily::two_row(ground).contains(&t.shape())
                && outcome.steps <= array.n())
            {
                out.failures.push(Failure::new(
                    Check::TwoRowCodomain,
                    Some(array),
                    format!("image {t} is not a standard tableau with at most two rows"),
                ));
            }
            match from_two_row_syt(&t) {
                Ok(back) if &back == array => {}
                Ok(back) => out.failures.push(Failure::new(
                    Check::TwoRowRoundTrip,
                    Some(array),
                    format!("inverse returned {back}"),
                )),
                Err(e) => out.failures.push(Failure::new(
                    Check::TwoRowRoundTrip,
                    Some(array),
                    e.to_string(),
                )),
            }
            Some(t)
        }
        Err(e) => {
            out.failures.push(Failure::new(
                Check::TwoRowForward,
                Some(array),
                e.to_string(),
            ));
            None
        }
    };

    if array.n() == 5 && array.mode() == Mode::Standard {
        let (ex_array, ex_hook, ex_two_row) = worked_example();
        if array == &ex_array && (hook != ex_hook || two_row.as_ref() != Some(&ex_two_row)) {
            out.failures.push(Failure::new(
                Check::WorkedExample,
                Some(array),
                "worked example maps to unexpected images",
            ));
        }
    }

    out.images.push(Image {
        array: array.clone(),
        hook,
        two_row,
    });
}

fn process_range(n: usize, mode: Mode, ranks: std::ops::Range<u64>) -> Partial {
    let mut partial = Partial::default();
    for array in Arrays::range(n, mode, ranks) {
        check_array(&array, &mut partial);
    }
    partial
}

/// Every hook tableau pair the first bijection should reach, enumerated
/// independently of it.
pub fn hook_codomain(n: usize, mode: Mode) -> Result<Vec<HookTableauPair>> {
    let bound = mode.ground(n) + 2;
    let mut out = Vec::new();
    for second_shape in HookFamily::hooks(n + 1).partitions() {
        let first_shape = match mode {
            Mode::Standard => second_shape.clone(),
            Mode::Remark => second_shape.plus_one(),
        };
        let firsts = enumerate_syt_bounded(&first_shape, bound)?;
        let seconds = enumerate_syt_bounded(&second_shape, bound)?;
        for first in &firsts {
            for second in &seconds {
                out.push(HookTableauPair {
                    first: first.clone(),
                    second: second.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Every standard tableau with at most two rows the second bijection should
/// reach.
pub fn two_row_codomain(n: usize, mode: Mode) -> Result<Vec<Tableau>> {
    let ground = mode.ground(n);
    let mut out = Vec::new();
    for shape in HookFamily::two_row(ground).partitions() {
        out.extend(enumerate_syt_bounded(&shape, ground)?);
    }
    Ok(out)
}

/// The composed map between hook tableau pairs and two-row tableaux,
/// materialized as lookup tables over all arrays.
#[derive(Clone, Debug, Default)]
pub struct Composition {
    forward: HashMap<HookTableauPair, Tableau>,
    backward: HashMap<Tableau, HookTableauPair>,
}

impl Composition {
    pub fn materialize(n: usize, mode: Mode) -> Result<Composition> {
        let mut c = Composition::default();
        for array in Arrays::new(n, mode) {
            let hook = to_hook_pair(&array);
            let two_row = run_forward(&array, false)?.tableau;
            c.insert(hook, two_row)
                .map_err(|detail| Error::invalid("composition", detail))?;
        }
        Ok(c)
    }

    fn insert(
        &mut self,
        hook: HookTableauPair,
        two_row: Tableau,
    ) -> std::result::Result<(), String> {
        if let Some(prev) = self.forward.insert(hook.clone(), two_row.clone()) {
            return Err(format!(
                "hook pair {} ; {} maps to both {prev} and {two_row}",
                hook.first, hook.second
            ));
        }
        if let Some(prev) = self.backward.insert(two_row.clone(), hook) {
            return Err(format!(
                "tableau {two_row} is reached from both {} ; {} and another pair",
                prev.first, prev.second
            ));
        }
        Ok(())
    }

    pub fn forward(&self, pair: &HookTableauPair) -> Option<&Tableau> {
        self.forward.get(pair)
    }

    pub fn backward(&self, tableau: &Tableau) -> Option<&HookTableauPair> {
        self.backward.get(tableau)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Checks that both directions are total on the given codomains and
    /// mutually inverse. Returns a description of the first problem found.
    pub fn check_bijection(
        &self,
        hooks: &[HookTableauPair],
        two_rows: &[Tableau],
    ) -> std::result::Result<(), String> {
        if self.forward.len() != hooks.len() || self.backward.len() != two_rows.len() {
            return Err(format!(
                "table sizes ({}, {}) differ from codomain sizes ({}, {})",
                self.forward.len(),
                self.backward.len(),
                hooks.len(),
                two_rows.len()
            ));
        }
        for pair in hooks {
            let t = self
                .forward(pair)
                .ok_or_else(|| format!("pair {} ; {} has no image", pair.first, pair.second))?;
            if self.backward(t) != Some(pair) {
                return Err(format!("backward({t}) does not return its preimage"));
            }
        }
        for t in two_rows {
            let pair = self
                .backward(t)
                .ok_or_else(|| format!("tableau {t} has no preimage"))?;
            if self.forward(pair) != Some(t) {
                return Err(format!("forward of backward({t}) differs"));
            }
        }
        Ok(())
    }
}

fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("exhaustive counts fit in u64")
}

fn resolve_remark_indexing(n: usize, lhs: u64) -> RemarkIndexing {
    let candidates: Vec<IndexingCandidate> = REMARK_WEIGHT_OFFSETS
        .iter()
        .filter_map(|&offset| {
            let weight = usize::try_from(n as i64 + offset).ok()?;
            let sum = to_u64(&hook_product_sum(weight));
            Some(IndexingCandidate {
                weight_offset: offset,
                hook_weight: weight,
                sum,
                matches: sum == lhs,
            })
        })
        .collect();
    let matching: Vec<i64> = candidates
        .iter()
        .filter(|c| c.matches)
        .map(|c| c.weight_offset)
        .collect();
    RemarkIndexing {
        unique: matching.len() == 1,
        resolved_offset: (matching.len() == 1).then(|| matching[0]),
        consistent_with_bijection: matching.contains(&REMARK_BIJECTION_OFFSET),
        candidates,
    }
}

/// Runs every check for `n` in `mode`. Fails only when `n` exceeds the
/// bound; check failures are reported inside the [`IdentityReport`].
pub fn certify_with(n: usize, mode: Mode, options: &CertifyOptions) -> Result<IdentityReport> {
    let bound = options.max_n.unwrap_or(match mode {
        Mode::Standard => DEFAULT_EXHAUSTIVE_BOUND,
        Mode::Remark => DEFAULT_REMARK_BOUND,
    });
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }

    let total = array_count(n, mode);
    let partial = shard_ranges(total, options.shards)
        .into_par_iter()
        .map(|ranks| process_range(n, mode, ranks))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Partial::default(), Partial::merge);
    let Partial {
        mut images,
        mut failures,
        histogram,
    } = partial;
    images.sort_by(|a, b| a.array.cmp(&b.array));

    let hook_side = match mode {
        Mode::Standard => identity_sides(n).0,
        Mode::Remark => hook_product_sum(n + 1),
    };
    let two_row_side = two_row_sum(mode.ground(n));

    let (lhs, rhs, remark_indexing) = match mode {
        Mode::Standard => (to_u64(&hook_side), to_u64(&two_row_side), None),
        Mode::Remark => {
            let lhs = to_u64(&two_row_side);
            let indexing = resolve_remark_indexing(n, lhs);
            let rhs = indexing
                .resolved_offset
                .or(indexing
                    .consistent_with_bijection
                    .then_some(REMARK_BIJECTION_OFFSET))
                .and_then(|off| indexing.candidates.iter().find(|c| c.weight_offset == off))
                .map_or_else(|| to_u64(&hook_side), |c| c.sum);
            if !indexing.consistent_with_bijection {
                failures.push(Failure::new(
                    Check::Indexing,
                    None,
                    "no candidate hook weight matching the hook bijection satisfies the identity",
                ));
            }
            (lhs, rhs, Some(indexing))
        }
    };
    if lhs != rhs || rhs != total {
        failures.push(Failure::new(
            Check::Identity,
            None,
            format!("lhs {lhs}, rhs {rhs}, array count {total}"),
        ));
    }

    // Injectivity, with both preimages on collision.
    let mut hook_seen: HashMap<&HookTableauPair, &ArrayPair> = HashMap::new();
    let mut two_row_seen: HashMap<&Tableau, &ArrayPair> = HashMap::new();
    for image in &images {
        if let Some(prev) = hook_seen.insert(&image.hook, &image.array) {
            failures.push(Failure {
                check: Check::HookInjectivity,
                input: Some(prev.clone()),
                other: Some(image.array.clone()),
                detail: format!("both map to {} ; {}", image.hook.first, image.hook.second),
            });
        }
        if let Some(t) = &image.two_row {
            if let Some(prev) = two_row_seen.insert(t, &image.array) {
                failures.push(Failure {
                    check: Check::TwoRowInjectivity,
                    input: Some(prev.clone()),
                    other: Some(image.array.clone()),
                    detail: format!("both map to {t}"),
                });
            }
        }
    }
    if hook_seen.len() as u64 != to_u64(&hook_side) {
        failures.push(Failure::new(
            Check::HookImageCount,
            None,
            format!("{} distinct images, expected {hook_side}", hook_seen.len()),
        ));
    }
    if two_row_seen.len() as u64 != to_u64(&two_row_side) {
        failures.push(Failure::new(
            Check::TwoRowImageCount,
            None,
            format!(
                "{} distinct images, expected {two_row_side}",
                two_row_seen.len()
            ),
        ));
    }

    // Composition over independently enumerated codomains.
    let mut composition = Composition::default();
    let mut composition_problem = None;
    for image in &images {
        let Some(t) = &image.two_row else {
            composition_problem.get_or_insert_with(|| "forward map failed".to_string());
            continue;
        };
        if let Err(e) = composition.insert(image.hook.clone(), t.clone()) {
            composition_problem.get_or_insert(e);
        }
    }
    if composition_problem.is_none() {
        let codomains = hook_codomain(n, mode).and_then(|h| Ok((h, two_row_codomain(n, mode)?)));
        match codomains {
            Ok((hooks, two_rows)) => {
                if (hooks.len() as u64, two_rows.len() as u64)
                    != (to_u64(&hook_side), to_u64(&two_row_side))
                {
                    composition_problem = Some(format!(
                        "enumerated codomain sizes ({}, {}) differ from counts ({hook_side}, {two_row_side})",
                        hooks.len(),
                        two_rows.len()
                    ));
                } else if let Err(e) = composition.check_bijection(&hooks, &two_rows) {
                    composition_problem = Some(e);
                }
            }
            Err(e) => composition_problem = Some(e.to_string()),
        }
    }
    if let Some(detail) = composition_problem {
        failures.push(Failure::new(Check::Composition, None, detail));
    }

    failures.sort();
    failures.dedup();
    let bijection1_ok = !failures.iter().any(|f| f.check.affects_hooks());
    let bijection2_ok = !failures.iter().any(|f| f.check.affects_two_row());
    let composition_ok = !failures.iter().any(|f| f.check == Check::Composition);

    Ok(IdentityReport {
        n,
        mode,
        lhs,
        rhs,
        array_count: total,
        bijection1_ok,
        bijection2_ok,
        composition_ok,
        step_histogram: histogram,
        remark_indexing,
        failures,
    })
}

/// Hook pair to two-row tableau through the shared array.
pub fn compose_forward(pair: &HookTableauPair) -> Result<Tableau> {
    let array = from_hook_pair(pair)?;
    run_forward(&array, false).map(|o| o.tableau)
}

/// Two-row tableau to hook pair through the shared array.
pub fn compose_backward(tableau: &Tableau) -> Result<HookTableauPair> {
    from_two_row_syt(tableau).map(|array| to_hook_pair(&array))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::binomial;

    #[test]
    fn identity_side_examples() {
        assert_eq!(identity_sides(1), (2u32.into(), 2u32.into()));
        assert_eq!(identity_sides(2), (6u32.into(), 6u32.into()));
        assert_eq!(identity_sides(5), (252u32.into(), 252u32.into()));
        for n in 1..=8 {
            let c = BigUint::from(binomial(2 * n, n));
            assert_eq!(identity_sides(n), (c.clone(), c));
        }
    }

    #[test]
    fn certify_small() {
        for (n, count) in [(1, 2), (2, 6), (5, 252)] {
            let report = certify(n).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(
                (report.lhs, report.rhs, report.array_count),
                (count, count, count)
            );
        }
        assert!(matches!(certify(9), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn remark_examples() {
        let r1 = certify_remark(1).unwrap();
        assert!(r1.passed(), "{r1:?}");
        assert_eq!((r1.lhs, r1.rhs), (3, 3));
        let r2 = certify_remark(2).unwrap();
        assert_eq!((r2.lhs, r2.rhs, r2.array_count), (10, 10, 10));
        assert_eq!(r2.remark_indexing.unwrap().resolved_offset, Some(1));

        let r0 = certify_remark(0).unwrap();
        assert!(r0.passed(), "{r0:?}");
        assert_eq!((r0.lhs, r0.rhs), (1, 1));
        // Hooks of weight 0 and 1 both give 1 here.
        assert!(!r0.remark_indexing.unwrap().unique);
    }

    #[test]
    fn report_independent_of_sharding() {
        for mode in [Mode::Standard, Mode::Remark] {
            let reference = certify_with(
                4,
                mode,
                &CertifyOptions {
                    max_n: None,
                    shards: 1,
                },
            )
            .unwrap();
            for shards in [2, 3, 7, 64, 1000] {
                let report = certify_with(
                    4,
                    mode,
                    &CertifyOptions {
                        max_n: None,
                        shards,
                    },
                )
                .unwrap();
                assert_eq!(report, reference, "shards={shards}");
            }
        }
    }

    #[test]
    fn composition_helpers_agree_with_table() {
        let table = Composition::materialize(3, Mode::Standard).unwrap();
        let hooks = hook_codomain(3, Mode::Standard).unwrap();
        let two_rows = two_row_codomain(3, Mode::Standard).unwrap();
        table.check_bijection(&hooks, &two_rows).unwrap();
        for pair in &hooks {
            let t = compose_forward(pair).unwrap();
            assert_eq!(table.forward(pair), Some(&t));
            assert_eq!(&compose_backward(&t).unwrap(), pair);
        }
    }

    #[test]
    fn broken_table_is_detected() {
        let mut table = Composition::materialize(2, Mode::Standard).unwrap();
        let hooks = hook_codomain(2, Mode::Standard).unwrap();
        let two_rows = two_row_codomain(2, Mode::Standard).unwrap();
        let victim = hooks[0].clone();
        table.forward.remove(&victim);
        assert!(table.check_bijection(&hooks, &two_rows).is_err());
    }
}
