//! The `syt` command line. [`run`] does all the work and returns the
//! captured output and exit status, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use syt_core::verify::{compose_backward, compose_forward, CertifyOptions, IdentityReport};
use syt_core::{
    count_syt, enumerate_arrays_bounded, enumerate_syt_bounded, from_hook_pair, from_two_row_syt,
    hook_partitions, run_forward, to_hook_pair, ArrayPair, BijectionTrace, HookFamily,
    HookTableauPair, Mode, Partition, Tableau,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CERTIFICATION_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "syt",
    version,
    about = "Bijections between row-increasing arrays and standard Young tableaux"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// Read the JSON document from PATH instead of stdin.
    #[arg(long, value_name = "PATH", conflicts_with = "json")]
    input: Option<PathBuf>,

    /// Inline JSON document.
    #[arg(long, value_name = "DOC")]
    json: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Number of standard Young tableaux of a shape.
    Count {
        #[arg(long, value_name = "PARTS")]
        shape: Partition,
    },
    /// Partitions in the hook family H(k,l;n).
    Hooks {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
    },
    /// All arrays for --n, or all standard tableaux of --shape.
    #[command(group = clap::ArgGroup::new("what").required(true).args(["n", "shape"]))]
    Enumerate {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "PARTS")]
        shape: Option<Partition>,
        #[arg(long, default_value_t = Mode::Standard)]
        mode: Mode,
        /// Override the enumeration bound (n for arrays, weight for shapes).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Array to a pair of hook tableaux.
    Map1(Input),
    /// Pair of hook tableaux to array.
    Unmap1(Input),
    /// Array to a standard tableau with at most two rows.
    Map2 {
        #[command(flatten)]
        input: Input,
        /// Emit the full step trace instead of the final tableau.
        #[arg(long)]
        trace: bool,
    },
    /// Two-row standard tableau to array.
    Unmap2(Input),
    /// Step-by-step trace of the two-row map.
    Trace(Input),
    /// Hook pair to two-row tableau, or two-row tableau to hook pair.
    Compose(Input),
    /// Exhaustively certify the identity for (n, n) arrays.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Exhaustively certify the identity for (n+1, n) arrays.
    VerifyRemark {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

#[derive(Debug)]
struct Failed {
    message: String,
    status: i32,
}

impl Failed {
    fn invalid(message: impl Into<String>) -> Self {
        Failed {
            message: message.into(),
            status: EXIT_INVALID,
        }
    }
}

impl From<syt_core::Error> for Failed {
    fn from(e: syt_core::Error) -> Self {
        Failed::invalid(e.to_string())
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stderr: rendered,
                    status: EXIT_INVALID,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: rendered,
                    status: EXIT_OK,
                    ..Output::default()
                }
            };
        }
    };
    let mut stdout = String::new();
    match execute(cli, stdin, &mut stdout) {
        Ok(status) => Output {
            stdout,
            stderr: String::new(),
            status,
        },
        Err(f) => Output {
            stdout,
            stderr: format!("error: {}\n", f.message),
            status: f.status,
        },
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, Failed> {
    if let Some(doc) = &input.json {
        return Ok(doc.clone());
    }
    let mut text = String::new();
    match &input.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failed::invalid(format!("{}: {e}", path.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failed::invalid(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn path_error<E: std::fmt::Display>(e: serde_path_to_error::Error<E>) -> Failed {
    let path = e.path().to_string();
    let inner = e.into_inner();
    if path == "." {
        Failed::invalid(inner.to_string())
    } else {
        Failed::invalid(format!("{path}: {inner}"))
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failed> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(path_error)?;
    de.end().map_err(|e| Failed::invalid(e.to_string()))?;
    Ok(value)
}

fn parse_value<T: DeserializeOwned>(value: serde_json::Value) -> Result<T, Failed> {
    serde_path_to_error::deserialize(value).map_err(path_error)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("library types serialize");
    s.push('\n');
    s
}

fn row_text(row: &[usize]) -> String {
    row.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn tableau_text(t: &Tableau, indent: &str) -> String {
    if t.rows().is_empty() {
        return format!("{indent}(empty)\n");
    }
    t.rows()
        .iter()
        .map(|r| format!("{indent}{}\n", row_text(r)))
        .collect()
}

fn array_text(a: &ArrayPair, indent: &str) -> String {
    format!(
        "{indent}{}\n{indent}{}\n",
        row_text(a.top()),
        row_text(a.bottom())
    )
}

fn pair_text(p: &HookTableauPair) -> String {
    format!(
        "first  {}:\n{}second {}:\n{}",
        p.first.shape(),
        tableau_text(&p.first, "  "),
        p.second.shape(),
        tableau_text(&p.second, "  ")
    )
}

fn trace_text(trace: &BijectionTrace) -> String {
    let mut out = String::new();
    for (state, pivot) in trace.states().iter().zip(trace.pivots()) {
        let _ = writeln!(out, "  {}", row_text(state.top()));
        let _ = writeln!(out, "  {}", row_text(state.bottom()));
        let _ = writeln!(out, "    -> pivot {pivot}");
    }
    let last = trace.final_state().to_tableau();
    let _ = writeln!(out, "final {} after {} steps:", last.shape(), trace.steps());
    out.push_str(&tableau_text(&last, "  "));
    out
}

fn report_text(r: &IdentityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n              {}", r.n);
    let _ = writeln!(out, "mode           {}", r.mode);
    let _ = writeln!(out, "lhs            {}", r.lhs);
    let _ = writeln!(out, "rhs            {}", r.rhs);
    let _ = writeln!(out, "array_count    {}", r.array_count);
    let _ = writeln!(out, "bijection1_ok  {}", r.bijection1_ok);
    let _ = writeln!(out, "bijection2_ok  {}", r.bijection2_ok);
    let _ = writeln!(out, "composition_ok {}", r.composition_ok);
    let _ = writeln!(out, "steps          count");
    for (steps, count) in &r.step_histogram {
        let _ = writeln!(out, "  {steps:<12} {count}");
    }
    if let Some(ix) = &r.remark_indexing {
        let _ = writeln!(out, "hook weight    sum      matches");
        for c in &ix.candidates {
            let _ = writeln!(
                out,
                "  n{:+} = {:<6} {:<8} {}",
                c.weight_offset, c.hook_weight, c.sum, c.matches
            );
        }
        let resolved = ix
            .resolved_offset
            .map_or_else(|| "ambiguous".to_string(), |o| format!("n{o:+}"));
        let _ = writeln!(out, "resolved       {resolved}");
    }
    for f in &r.failures {
        let _ = writeln!(out, "FAILED {:?}: {}", f.check, f.detail);
    }
    let _ = writeln!(out, "passed         {}", r.passed());
    out
}

fn emit<T: Serialize + ?Sized>(
    format: Format,
    out: &mut String,
    value: &T,
    text: impl FnOnce() -> String,
) {
    match format {
        Format::Json => out.push_str(&json(value)),
        Format::Text => out.push_str(&text()),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failed> {
    let format = cli.format;
    match cli.verb {
        Verb::Count { shape } => {
            let _ = writeln!(out, "{}", count_syt(&shape));
        }
        Verb::Hooks { k, l, n } => {
            let parts = hook_partitions(&HookFamily::new(k, l, n));
            emit(format, out, &parts, || {
                parts.iter().map(|p| format!("{p}\n")).collect()
            });
        }
        Verb::Enumerate {
            n,
            shape,
            mode,
            max_n,
        } => match (n, shape) {
            (Some(n), _) => {
                let bound = max_n.unwrap_or(syt_core::arrays::DEFAULT_ARRAY_BOUND);
                let arrays = enumerate_arrays_bounded(n, mode, bound)?;
                emit(format, out, &arrays, || {
                    arrays
                        .iter()
                        .map(|a| array_text(a, ""))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
            (None, Some(shape)) => {
                let bound = max_n.unwrap_or(syt_core::tableau::DEFAULT_SYT_BOUND);
                let all = enumerate_syt_bounded(&shape, bound)?;
                emit(format, out, &all, || {
                    all.iter()
                        .map(|t| tableau_text(t, ""))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
            (None, None) => unreachable!("clap requires --n or --shape"),
        },
        Verb::Map1(input) => {
            let array: ArrayPair = parse(&read_input(&input, stdin)?)?;
            let pair = to_hook_pair(&array);
            emit(format, out, &pair, || pair_text(&pair));
        }
        Verb::Unmap1(input) => {
            let pair: HookTableauPair = parse(&read_input(&input, stdin)?)?;
            let array = from_hook_pair(&pair)?;
            emit(format, out, &array, || array_text(&array, ""));
        }
        Verb::Map2 { input, trace } => {
            let array: ArrayPair = parse(&read_input(&input, stdin)?)?;
            let outcome = run_forward(&array, trace)?;
            match outcome.trace {
                Some(trace) => emit(format, out, &trace, || trace_text(&trace)),
                None => emit(format, out, &outcome.tableau, || {
                    tableau_text(&outcome.tableau, "")
                }),
            }
        }
        Verb::Unmap2(input) => {
            let tableau: Tableau = parse(&read_input(&input, stdin)?)?;
            let array = from_two_row_syt(&tableau)?;
            emit(format, out, &array, || array_text(&array, ""));
        }
        Verb::Trace(input) => {
            let array: ArrayPair = parse(&read_input(&input, stdin)?)?;
            let trace = run_forward(&array, true)?
                .trace
                .expect("trace was requested");
            emit(format, out, &trace, || trace_text(&trace));
        }
        Verb::Compose(input) => {
            let value: serde_json::Value = parse(&read_input(&input, stdin)?)?;
            if value.get("first").is_some() || value.get("second").is_some() {
                let pair: HookTableauPair = parse_value(value)?;
                let tableau = compose_forward(&pair)?;
                emit(format, out, &tableau, || tableau_text(&tableau, ""));
            } else {
                let tableau: Tableau = parse_value(value)?;
                let pair = compose_backward(&tableau)?;
                emit(format, out, &pair, || pair_text(&pair));
            }
        }
        Verb::Verify { n, max_n } => return certify(n, Mode::Standard, max_n, format, out),
        Verb::VerifyRemark { n, max_n } => return certify(n, Mode::Remark, max_n, format, out),
    }
    Ok(EXIT_OK)
}

fn certify(
    n: usize,
    mode: Mode,
    max_n: Option<usize>,
    format: Format,
    out: &mut String,
) -> Result<i32, Failed> {
    let options = CertifyOptions {
        max_n,
        ..CertifyOptions::default()
    };
    let report = syt_core::certify_with(n, mode, &options)?;
    emit(format, out, &report, || report_text(&report));
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CERTIFICATION_FAILED
    })
}
