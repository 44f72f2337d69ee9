//! `curlgraph`: generate graphs, report curling invariants, run the
//! extension process, print Jaco tables and run the summand pipeline.
//!
//! Exit codes: 0 on success, 1 on any error (including a failed
//! `jaco-table --check`), 2 when a conjecture run exhausts its step budget
//! without appending a 1.

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use curlgraph_core::graphs::io::{write_arc_list, write_edge_list};
use curlgraph_core::graphs::{JacoDegrees, JACO_REFERENCE_TABLE};
use curlgraph_core::seqcore::DEFAULT_MAX_STEPS;
use curlgraph_core::summand::max_product_summand_with_budget;
use curlgraph_core::{
    cn_graph, compound_cn, curling_index, greedy_summand_chain, group_degrees, ic_graph, l_star,
    rasta_compound_series, verify_conjecture_with, Arrangement, ConjectureOptions, CurlError,
    IdentityString, IntString, StepBudget,
};

mod input;

pub use input::{generate, resolve, Family, Generated, Origin, Resolved};

pub const DEFAULT_MAX_N: usize = 1_000_000;
pub const MAX_JACO_TABLE: usize = 10_000;
pub const DEFAULT_SUMMAND_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(
    name = "curlgraph",
    version,
    about = "Curling numbers of sequences and graphs"
)]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to PATH (atomically) instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Reserved; no command is randomised yet.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Step limit for the extension process.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
    /// Largest graph (in vertices) a generator may build.
    #[arg(long, global = true, env = "CURLGRAPH_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph family as an edge list (default) or JSON.
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Vec<u64>,
    },
    /// Invariant report for a family, a file, or an inline sequence.
    Invariants {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// Extend a sequence by its curling number until a 1 appears.
    Conjecture {
        #[arg(long, default_value_t = Arrangement::Descending)]
        arrangement: Arrangement,
        /// Keep extending after the first 1, for exactly --max-steps terms.
        #[arg(long)]
        stream: bool,
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// Degree sequence, ic, curling index and cn of Jaco graphs 1..=N_MAX.
    JacoTable {
        n_max: usize,
        /// Compare rows up to 25 against the reference table.
        #[arg(long)]
        check: bool,
    },
    /// Splitting chain, Rasta compound series and product maximizers for n.
    Summand {
        n: u64,
        /// Step budget per maximizer search; exhausted searches report null.
        #[arg(long, default_value_t = DEFAULT_SUMMAND_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Core(CurlError),
    Input { source: String, error: CurlError },
    Io { path: String, error: io::Error },
    Json(serde_json::Error),
    Csv(csv::Error),
}

impl AppError {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        AppError::Usage(msg.into())
    }

    pub(crate) fn io(path: impl AsRef<Path>, error: io::Error) -> Self {
        AppError::Io {
            path: path.as_ref().display().to_string(),
            error,
        }
    }

    pub(crate) fn input(source: &str, error: CurlError) -> Self {
        AppError::Input {
            source: source.to_string(),
            error,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(m) => f.write_str(m),
            AppError::Core(e) => write!(f, "{e}"),
            AppError::Input { source, error } => write!(f, "{source}: {error}"),
            AppError::Io { path, error } => write!(f, "{path}: {error}"),
            AppError::Json(e) => write!(f, "json: {e}"),
            AppError::Csv(e) => write!(f, "csv: {e}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<CurlError> for AppError {
    fn from(e: CurlError) -> Self {
        AppError::Core(e)
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Json(e)
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Csv(e)
    }
}

/// Command output plus the exit status it implies.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
    /// Diagnostics for stderr that do not stop the output being written.
    pub notes: Vec<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: 0,
            notes: Vec::new(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli).and_then(|o| emit(&cli, o)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, outcome: Outcome) -> Result<u8, AppError> {
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    match &cli.out {
        Some(path) => write_atomic(path, outcome.output.as_bytes())?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(outcome.output.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| AppError::io("stdout", e))?;
        }
    }
    Ok(outcome.code)
}

/// Writes through a temporary file in the target directory, then renames it
/// into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), AppError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| AppError::io(dir, e))?;
    tmp.write_all(bytes)
        .map_err(|e| AppError::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| AppError::io(path, e.error))?;
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Outcome, AppError> {
    match &cli.command {
        Command::Gen { family, params } => cmd_gen(cli, *family, params),
        Command::Invariants { input } => cmd_invariants(cli, input),
        Command::Conjecture {
            arrangement,
            stream,
            input,
        } => cmd_conjecture(cli, *arrangement, *stream, input),
        Command::JacoTable { n_max, check } => cmd_jaco_table(cli, *n_max, *check),
        Command::Summand { n, budget } => cmd_summand(cli, *n, *budget),
    }
}

fn unsupported(command: &str, format: Format) -> AppError {
    AppError::usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

#[derive(Serialize)]
struct GraphJson<'a> {
    family: &'a str,
    params: &'a [u64],
    directed: bool,
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn cmd_gen(cli: &Cli, family: Family, params: &[u64]) -> Result<Outcome, AppError> {
    let g = generate(family, params, cli.max_n)?;
    match cli.format.unwrap_or(Format::Edgelist) {
        Format::Edgelist => Ok(Outcome::ok(match &g {
            Generated::Simple(s) => write_edge_list(s),
            Generated::Directed(d) => write_arc_list(d),
        })),
        Format::Json => {
            let (directed, n, edges) = match &g {
                Generated::Simple(s) => (false, s.vertex_count(), s.edges().collect()),
                Generated::Directed(d) => (true, d.vertex_count(), d.arcs().collect()),
            };
            let doc = GraphJson {
                family: family.name(),
                params,
                directed,
                n,
                edges,
            };
            Ok(Outcome::ok(serde_json::to_string(&doc)? + "\n"))
        }
        f => Err(unsupported("gen", f)),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureSummary {
    pub arrangement: &'static str,
    pub steps: usize,
    pub reached_one: bool,
}

/// Invariant report for one input. Fields serialize in declaration order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub n: u64,
    pub degree_string: IdentityString,
    pub cn: u64,
    pub ic: u64,
    /// `None` when `ic + ic!` does not fit in 64 bits.
    pub curling_index: Option<u64>,
    /// `None` when the product does not fit in 128 bits.
    pub compound_cn: Option<u128>,
    pub conjecture: ConjectureSummary,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn build(r: &Resolved, max_steps: usize) -> Result<Report, AppError> {
        let err = |e| AppError::input(&r.descriptor, e);
        let d = group_degrees(&r.sequence).map_err(err)?;
        let mut warnings = Vec::new();
        match r.origin {
            Origin::Sequence => warnings.push("graph realizability not checked".to_string()),
            Origin::EdgeList => warnings.push("connectivity not checked".to_string()),
            Origin::Family => {}
        }
        let curling_index = curling_index(&d).ok();
        if curling_index.is_none() {
            warnings.push("curling index overflows 64 bits".to_string());
        }
        let compound = compound_cn(&d).ok();
        if compound.is_none() {
            warnings.push("compound curling number overflows 128 bits".to_string());
        }
        let arrangement = Arrangement::Descending;
        let trace = verify_conjecture_with(
            &arrangement.apply(&r.sequence),
            ConjectureOptions {
                max_steps,
                stop_at_one: true,
            },
        )
        .map_err(err)?;
        Ok(Report {
            input: r.descriptor.clone(),
            n: d.total(),
            cn: cn_graph(&d).map_err(err)?,
            ic: ic_graph(&d).map_err(err)?,
            degree_string: d,
            curling_index,
            compound_cn: compound,
            conjecture: ConjectureSummary {
                arrangement: arrangement.name(),
                steps: trace.steps,
                reached_one: trace.reached_one,
            },
            warnings,
        })
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "overflow".to_string(), |x| x.to_string())
}

fn cmd_invariants(cli: &Cli, args: &[String]) -> Result<Outcome, AppError> {
    let reports = resolve(args, cli.max_n)?
        .iter()
        .map(|r| Report::build(r, cli.max_steps))
        .collect::<Result<Vec<_>, _>>()?;
    let output = match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&serde_json::to_string(r)?);
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "n",
                "degree_string",
                "cn",
                "ic",
                "curling_index",
                "compound_cn",
            ])?;
            for r in &reports {
                w.write_record([
                    r.n.to_string(),
                    r.degree_string.to_string(),
                    r.cn.to_string(),
                    r.ic.to_string(),
                    opt(r.curling_index),
                    opt(r.compound_cn),
                ])?;
            }
            csv_string(w)?
        }
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "input: {}", r.input);
                let _ = writeln!(out, "n: {}", r.n);
                let _ = writeln!(out, "degree string: {}", r.degree_string);
                let _ = writeln!(
                    out,
                    "cn: {}  ic: {}  curling index: {}  compound cn: {}",
                    r.cn,
                    r.ic,
                    opt(r.curling_index),
                    opt(r.compound_cn)
                );
                let _ = writeln!(
                    out,
                    "conjecture ({}): reached_one={} after {} steps",
                    r.conjecture.arrangement, r.conjecture.reached_one, r.conjecture.steps
                );
                for w in &r.warnings {
                    let _ = writeln!(out, "warning: {w}");
                }
            }
            out
        }
        f => return Err(unsupported("invariants", f)),
    };
    Ok(Outcome::ok(output))
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, AppError> {
    let bytes = w
        .into_inner()
        .map_err(|e| AppError::io("csv buffer", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct TraceJson<'a> {
    input: &'a str,
    arrangement: &'static str,
    start: &'a IntString,
    appended: &'a [u64],
    steps: usize,
    reached_one: bool,
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_conjecture(
    cli: &Cli,
    arrangement: Arrangement,
    stream: bool,
    args: &[String],
) -> Result<Outcome, AppError> {
    let inputs = resolve(args, cli.max_n)?;
    let opts = ConjectureOptions {
        max_steps: cli.max_steps,
        stop_at_one: !stream,
    };
    let mut traces = Vec::with_capacity(inputs.len());
    for r in &inputs {
        let start = arrangement.apply(&r.sequence);
        let trace =
            verify_conjecture_with(&start, opts).map_err(|e| AppError::input(&r.descriptor, e))?;
        traces.push(trace);
    }
    let batch = inputs.len() > 1;
    let output = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut out = String::new();
            for (r, t) in inputs.iter().zip(&traces) {
                if batch {
                    let _ = writeln!(out, "input: {}", r.descriptor);
                }
                let _ = writeln!(out, "appended: {}", join(&t.appended));
                let _ = writeln!(out, "steps: {}", t.steps);
                let _ = writeln!(out, "reached_one: {}", t.reached_one);
            }
            out
        }
        Format::Json => {
            let mut out = String::new();
            for (r, t) in inputs.iter().zip(&traces) {
                let doc = TraceJson {
                    input: &r.descriptor,
                    arrangement: arrangement.name(),
                    start: &t.start,
                    appended: &t.appended,
                    steps: t.steps,
                    reached_one: t.reached_one,
                };
                out.push_str(&serde_json::to_string(&doc)?);
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["input", "arrangement", "steps", "reached_one", "appended"])?;
            for (r, t) in inputs.iter().zip(&traces) {
                w.write_record([
                    r.descriptor.clone(),
                    arrangement.name().to_string(),
                    t.steps.to_string(),
                    t.reached_one.to_string(),
                    join(&t.appended),
                ])?;
            }
            csv_string(w)?
        }
        f => return Err(unsupported("conjecture", f)),
    };
    let code = if traces.iter().all(|t| t.reached_one) {
        0
    } else {
        2
    };
    Ok(Outcome {
        output,
        code,
        notes: Vec::new(),
    })
}

#[derive(Serialize)]
struct JacoRow {
    n: usize,
    degree_sequence: IntString,
    ic: u64,
    curling_index: Option<u64>,
    cn: u64,
}

fn cmd_jaco_table(cli: &Cli, n_max: usize, check: bool) -> Result<Outcome, AppError> {
    if !(1..=MAX_JACO_TABLE).contains(&n_max) {
        return Err(AppError::usage(format!(
            "n_max must be in 1..={MAX_JACO_TABLE}, got {n_max}"
        )));
    }
    let format = cli.format.unwrap_or(Format::Text);
    if format == Format::Edgelist {
        return Err(unsupported("jaco-table", format));
    }
    let jd = JacoDegrees::new(n_max)?;
    let mut notes = Vec::new();
    let mut out = String::new();
    let mut csv_w = csv::Writer::from_writer(Vec::new());
    if format == Format::Csv {
        csv_w.write_record(["n", "degree_sequence", "ic", "curling_index", "cn"])?;
    }
    for n in 1..=n_max {
        let degrees = jd.degrees(n)?;
        let d = group_degrees(&degrees)?;
        let row = JacoRow {
            n,
            ic: ic_graph(&d)?,
            curling_index: curling_index(&d).ok(),
            cn: cn_graph(&d)?,
            degree_sequence: degrees,
        };
        if check && n <= JACO_REFERENCE_TABLE.len() {
            let (seq, ic, index, cn) = JACO_REFERENCE_TABLE[n - 1];
            if row.degree_sequence.entries() != seq {
                notes.push(format!(
                    "row {n}: degree sequence {} differs from reference {}",
                    row.degree_sequence,
                    IntString::from(seq)
                ));
            }
            if (row.ic, row.curling_index, row.cn) != (ic, Some(index), cn) {
                notes.push(format!(
                    "row {n}: (ic, curling index, cn) = ({}, {}, {}) differs from reference ({ic}, {index}, {cn})",
                    row.ic,
                    opt(row.curling_index),
                    row.cn
                ));
            }
        }
        match format {
            Format::Text => {
                let _ = writeln!(
                    out,
                    "{} {} {} {}",
                    row.degree_sequence,
                    row.ic,
                    opt(row.curling_index),
                    row.cn
                );
            }
            Format::Json => {
                out.push_str(&serde_json::to_string(&row)?);
                out.push('\n');
            }
            _ => csv_w.write_record([
                n.to_string(),
                row.degree_sequence.to_string(),
                row.ic.to_string(),
                opt(row.curling_index),
                row.cn.to_string(),
            ])?,
        }
    }
    if format == Format::Csv {
        out = csv_string(csv_w)?;
    }
    let code = if notes.is_empty() {
        if check {
            notes.push(format!(
                "check passed for rows 1..={}",
                n_max.min(JACO_REFERENCE_TABLE.len())
            ));
        }
        0
    } else {
        1
    };
    Ok(Outcome {
        output: out,
        code,
        notes,
    })
}

#[derive(Serialize)]
struct MaximizerComparison {
    l: usize,
    greedy: Vec<u64>,
    greedy_product: u128,
    /// `None` when the search ran out of budget.
    maximizer: Option<Vec<u64>>,
    maximizer_product: Option<u128>,
}

#[derive(Serialize)]
struct SummandReport {
    n: u64,
    chain: Vec<Vec<u64>>,
    series: Vec<(usize, u128)>,
    l_star: usize,
    max_product: Vec<MaximizerComparison>,
}

fn cmd_summand(cli: &Cli, n: u64, budget: u64) -> Result<Outcome, AppError> {
    let chain = greedy_summand_chain(n)?;
    let series = rasta_compound_series(n)?;
    let mut max_product = Vec::with_capacity(chain.len());
    for s in &chain {
        let found = match max_product_summand_with_budget(n, s.len(), &mut StepBudget::new(budget))
        {
            Ok(found) => found,
            Err(CurlError::BudgetExhausted(_)) => None,
            Err(e) => return Err(e.into()),
        };
        max_product.push(MaximizerComparison {
            l: s.len(),
            greedy: s.parts().to_vec(),
            greedy_product: s.product(),
            maximizer_product: found.as_ref().map(|m| m.product()),
            maximizer: found.map(|m| m.parts().to_vec()),
        });
    }
    let report = SummandReport {
        n,
        chain: chain.iter().map(|s| s.parts().to_vec()).collect(),
        series,
        l_star: l_star(n)?,
        max_product,
    };
    let output = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string(&report)? + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n: {n}  l*: {}", report.l_star);
            for (s, (c, (_, cnc))) in chain
                .iter()
                .zip(report.max_product.iter().zip(&report.series))
            {
                let _ = writeln!(
                    out,
                    "l={} greedy {s} product {} rasta cn^c {cnc} maximizer {}",
                    c.l,
                    c.greedy_product,
                    c.maximizer.as_ref().map_or_else(
                        || "budget exhausted".to_string(),
                        |m| format!(
                            "{{{}}} product {}",
                            join(m).replace(' ', ","),
                            opt(c.maximizer_product)
                        )
                    )
                );
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "l",
                "greedy",
                "greedy_product",
                "rasta_compound_cn",
                "maximizer",
                "maximizer_product",
            ])?;
            for (c, (_, cnc)) in report.max_product.iter().zip(&report.series) {
                w.write_record([
                    c.l.to_string(),
                    join(&c.greedy),
                    c.greedy_product.to_string(),
                    cnc.to_string(),
                    c.maximizer.as_deref().map(join).unwrap_or_default(),
                    c.maximizer_product
                        .map(|p| p.to_string())
                        .unwrap_or_default(),
                ])?;
            }
            csv_string(w)?
        }
        f => return Err(unsupported("summand", f)),
    };
    Ok(Outcome::ok(output))
}
