//! End-to-end acceptance criteria. Runs as a plain binary (`harness = false`)
//! and prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use syt_core::verify::{hook_codomain, two_row_codomain, Composition, REMARK_BIJECTION_OFFSET};
use syt_core::{
    certify, certify_remark, count_syt, enumerate_arrays, enumerate_syt, identity_sides,
    partition_of, partitions_of, to_hook_pair, trace_two_row, ArrayPair, Mode, Tableau,
    TwoRowState,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

fn tab(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn state(top: &[usize], bottom: &[usize]) -> TwoRowState {
    TwoRowState::new(top.to_vec(), bottom.to_vec()).unwrap()
}

/// `C(n, k)` by Pascal's rule, independent of the library.
fn pascal(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k]
}

/// Number of standard fillings among all permutations of `1..=n` laid out
/// in `shape`.
fn permutation_count(shape: &[usize]) -> usize {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], shape: &[usize], count: &mut usize) {
        let n = used.len() - 1;
        if prefix.len() == n {
            let mut rows = Vec::new();
            let mut rest = &prefix[..];
            for &len in shape {
                rows.push(rest[..len].to_vec());
                rest = &rest[len..];
            }
            if Tableau::new(rows).unwrap().is_standard() {
                *count += 1;
            }
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, shape, count);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let n: usize = shape.iter().sum();
    let mut count = 0;
    go(&mut Vec::new(), &mut vec![false; n + 1], shape, &mut count);
    count
}

fn worked_example_fidelity() -> Outcome {
    let array = ArrayPair::new(vec![2, 4, 8, 9, 10], vec![1, 3, 5, 6, 7]).unwrap();
    let start = Instant::now();
    let pair = to_hook_pair(&array);
    let trace = trace_two_row(&array).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    ensure(pair.first.row(0) == [1, 3, 5], || {
        format!("first row {:?}", pair.first.row(0))
    })?;
    ensure(pair.first.column(0) == [1, 2, 4, 6], || {
        format!("first column {:?}", pair.first.column(0))
    })?;
    ensure(pair.second.column(0) == [1, 4, 5, 6], || {
        format!("second column {:?}", pair.second.column(0))
    })?;
    ensure(pair.second.row(0) == [1, 2, 3], || {
        format!("second row {:?}", pair.second.row(0))
    })?;

    let expected_states = [
        state(&[2, 4, 8, 9, 10], &[1, 3, 5, 6, 7]),
        state(&[1, 2, 4, 8, 9, 10], &[3, 5, 6, 7]),
        state(&[3, 5, 6, 7, 8, 9, 10], &[1, 2, 4]),
        state(&[1, 3, 5, 6, 7, 8, 9, 10], &[2, 4]),
    ];
    ensure(trace.states() == expected_states, || {
        format!("trace states {:?}", trace.states())
    })?;
    ensure(trace.pivots() == [1, 4, 1], || {
        format!("pivots {:?}", trace.pivots())
    })?;
    let last = trace.final_state().to_tableau();
    ensure(last == tab(&[&[1, 3, 5, 6, 7, 8, 9, 10], &[2, 4]]), || {
        format!("final {last}")
    })?;
    ensure(last.shape() == partition_of(&[8, 2]).unwrap(), || {
        format!("shape {}", last.shape())
    })?;
    within(elapsed, Duration::from_millis(1), "both maps")?;
    Ok(format!("3 steps, pivots 1,4,1, {elapsed:?}"))
}

fn identity_at_desk_scale() -> Outcome {
    let start = Instant::now();
    for n in 1..=8 {
        let (lhs, rhs) = identity_sides(n);
        let c = BigUint::from(pascal(2 * n, n));
        ensure(lhs == rhs && rhs == c, || {
            format!("n={n}: {lhs} vs {rhs}, C={c}")
        })?;
    }
    let (l5, _) = identity_sides(5);
    let (l8, _) = identity_sides(8);
    ensure(
        l5 == BigUint::from(252u32) && l8 == BigUint::from(12870u32),
        || format!("spot values {l5}, {l8}"),
    )?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "identity sides")?;
    Ok(format!("n=1..8, {elapsed:?}"))
}

fn exhaustive_bijectivity() -> Outcome {
    let mut n8 = Duration::ZERO;
    for n in 1..=8 {
        let start = Instant::now();
        let report = certify(n).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if n == 8 {
            n8 = elapsed;
        }
        let c = pascal(2 * n, n);
        ensure(report.passed(), || format!("n={n}: {:?}", report.failures))?;
        ensure(report.bijection1_ok && report.bijection2_ok, || {
            format!("n={n}: flags")
        })?;
        ensure(
            report.lhs == c && report.rhs == c && report.array_count == c,
            || {
                format!(
                    "n={n}: counts {} {} {}",
                    report.lhs, report.rhs, report.array_count
                )
            },
        )?;
        ensure(report.step_histogram.values().sum::<u64>() == c, || {
            format!("n={n}: histogram {:?}", report.step_histogram)
        })?;
    }
    within(n8, Duration::from_secs(60), "certify(8)")?;
    Ok(format!("n=1..8, certify(8) {n8:?}"))
}

fn counting_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut shapes = 0;
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let listed = enumerate_syt(&lambda).map_err(|e| e.to_string())?;
            ensure(count_syt(&lambda) == BigUint::from(listed.len()), || {
                format!("{lambda}: {} vs {}", count_syt(&lambda), listed.len())
            })?;
            ensure(listed.iter().all(Tableau::is_standard), || {
                format!("{lambda}: non-standard")
            })?;
            shapes += 1;
        }
    }
    let shape = partition_of(&[4, 3, 2]).unwrap();
    let brute = permutation_count(&[4, 3, 2]);
    ensure(
        brute == 168
            && count_syt(&shape) == BigUint::from(168u32)
            && enumerate_syt(&shape).unwrap().len() == 168,
        || format!("f^(4,3,2): brute force {brute}, hook {}", count_syt(&shape)),
    )?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30), "counting oracle")?;
    Ok(format!("{shapes} shapes, f^(4,3,2)=168, {elapsed:?}"))
}

fn inverse_step_soundness() -> Outcome {
    let mut checked = 0u64;
    for mode in [Mode::Standard, Mode::Remark] {
        for n in 1..=7 {
            for array in enumerate_arrays(n, mode).map_err(|e| e.to_string())? {
                let trace = trace_two_row(&array).map_err(|e| e.to_string())?;
                ensure(trace.steps() <= n, || {
                    format!("{array}: {} steps", trace.steps())
                })?;
                for s in &trace.states()[..trace.steps()] {
                    let (next, _) = s.forward_step().map_err(|e| e.to_string())?;
                    let back = next.inverse_step().map_err(|e| format!("{s}: {e}"))?;
                    ensure(&back == s, || format!("{s} -> {next} -> {back}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} non-standard states"))
}

fn remark_identity() -> Outcome {
    let start = Instant::now();
    let mut offsets = Vec::new();
    for n in 1..=6 {
        let report = certify_remark(n).map_err(|e| e.to_string())?;
        let c = pascal(2 * n + 1, n + 1);
        ensure(report.passed(), || format!("n={n}: {:?}", report.failures))?;
        ensure(report.lhs == c && report.rhs == c, || {
            format!("n={n}: lhs {} rhs {} C={c}", report.lhs, report.rhs)
        })?;
        let indexing = report.remark_indexing.ok_or("missing indexing")?;
        ensure(indexing.unique, || {
            format!("n={n}: {:?}", indexing.candidates)
        })?;
        offsets.push(indexing.resolved_offset.ok_or("unresolved")?);
    }
    ensure(offsets.iter().all(|&o| o == offsets[0]), || {
        format!("offsets {offsets:?}")
    })?;
    ensure(offsets[0] == REMARK_BIJECTION_OFFSET, || {
        format!("offset {}", offsets[0])
    })?;
    ensure(pascal(3, 2) == 3 && pascal(5, 3) == 10, || {
        "spot values".into()
    })?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "certify_remark(1..=6)")?;
    Ok(format!(
        "hook weight n{:+} for n=1..6, {elapsed:?}",
        offsets[0]
    ))
}

fn composition() -> Outcome {
    for n in 1..=6 {
        let table = Composition::materialize(n, Mode::Standard).map_err(|e| e.to_string())?;
        let hooks = hook_codomain(n, Mode::Standard).map_err(|e| e.to_string())?;
        let two_rows = two_row_codomain(n, Mode::Standard).map_err(|e| e.to_string())?;
        let c = pascal(2 * n, n) as usize;
        ensure(
            hooks.len() == c && two_rows.len() == c && table.len() == c,
            || {
                format!(
                    "n={n}: sizes {} {} {}",
                    hooks.len(),
                    two_rows.len(),
                    table.len()
                )
            },
        )?;
        table
            .check_bijection(&hooks, &two_rows)
            .map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok("n=1..6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked example fidelity", worked_example_fidelity),
        ("identity at desk scale", identity_at_desk_scale),
        ("exhaustive bijectivity", exhaustive_bijectivity),
        ("counting oracle equivalence", counting_oracle_equivalence),
        ("inverse-step soundness", inverse_step_soundness),
        ("remark identity", remark_identity),
        ("composition", composition),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
