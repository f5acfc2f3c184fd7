//! Command-line orchestration: product-spec parsing, pipeline dispatch,
//! and deterministic output rendering.
//!
//! A product is described by a line-oriented spec file:
//!
//! ```text
//! # comments and blank lines are ignored
//! factor complete 3
//! factor cycle 5            # cycle 2 is an alias for complete 2
//! factor ladder 2           # finite diamond-chain segment, 2 links/side
//! factor file graph.txt     # edge-list graph file
//! factor rational num=[0,4,4,4] den=[1,0,-2]
//! option tol 1/1000000000000
//! option series-order 12
//! option budget 1000000000
//! ```
//!
//! A factor size may be the placeholder `$name` for the `table` command,
//! which substitutes each value from `--param name=a..b`.
//!
//! All outputs are deterministic: the same spec and options produce
//! byte-identical bytes. Numbers render as decimal strings — exact
//! rationals as `p/q`, floats rounded to six significant digits.
//!
//! Exit codes: 0 success; 1 runtime failure (I/O, exhausted enumeration
//! budget, no root); 2 result computed but not certified; 3 series
//! verification mismatch; 64 unusable invocation or spec.

use crate::enumerate::{
    factor_saw_counts, free_product_saw_counts_with, EnumerateError, EnumerateOptions,
    DEFAULT_NODE_BUDGET,
};
use crate::genfun::{genfun_from_counts, genfun_from_rational, FactorGenFun, GenFunError};
use crate::graphs::{build_complete, build_cycle, build_ladder_segment, parse_graph, GraphError, RootedGraph};
use crate::roots::{connective_constant, ConnectiveResult, DiagStatus, SolveError, SolveOptions};
use crate::{Int, IntPoly, Rat};
use clap::{Parser, Subcommand};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Default series order when neither `-N` nor `option series-order` is
/// given.
pub const DEFAULT_DISPLAY_ORDER: usize = 12;

/// Significant digits for float rendering, matching the precision the
/// quantities are usually quoted at.
pub const FLOAT_DIGITS: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Spec { path: String, line: usize, message: String },
    #[error("{path}: {message}")]
    SpecFile { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    GraphFile { path: String, source: GraphError },
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

impl CliError {
    /// Exit code for this failure: 64 for anything wrong with the
    /// invocation or its input files, 1 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec { .. }
            | CliError::SpecFile { .. }
            | CliError::Usage(_)
            | CliError::GraphFile { .. }
            | CliError::GenFun(_) => 64,
            CliError::Io { .. } | CliError::Solve(_) | CliError::Enumerate(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "connective",
    version,
    about = "Connective constants and SAW series of free products of rooted graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON (the default).
    #[arg(long, global = true, group = "format")]
    json: bool,
    /// Emit CSV rows.
    #[arg(long, global = true, group = "format")]
    csv: bool,
    /// Emit human-readable text.
    #[arg(long, global = true, group = "format")]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified connective constant μ of the product in a spec file
    Mu {
        /// Product spec file
        spec: PathBuf,
        /// Width tolerance for the z_* interval (rational, e.g. 1e-12)
        #[arg(long)]
        tol: Option<String>,
    },
    /// Exact SAW series of the product
    Series {
        /// Product spec file
        spec: PathBuf,
        /// Highest length to expand to
        #[arg(short = 'N', long)]
        order: Option<usize>,
        /// Re-count by brute-force walk enumeration and compare
        #[arg(long)]
        verify: bool,
        /// Node budget for the verification enumeration
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact SAW counts of a single rooted graph
    Enumerate {
        /// complete:N, cycle:N, ladder:K, or a graph file path
        graph: String,
        /// Highest length to report (defaults to the longest walk)
        #[arg(short = 'N', long)]
        max_len: Option<usize>,
    },
    /// μ across a one-parameter family of products
    Table {
        /// Product spec file with one $parameter
        spec: PathBuf,
        /// Parameter range, e.g. n=4..10 (inclusive)
        #[arg(long)]
        param: String,
        /// Width tolerance for each z_* interval
        #[arg(long)]
        tol: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl Cli {
    fn format(&self) -> OutputFormat {
        if self.csv {
            OutputFormat::Csv
        } else if self.text {
            OutputFormat::Text
        } else {
            OutputFormat::Json
        }
    }
}

/// Parses arguments, runs the requested command, and returns the process
/// exit code. Never panics on bad input.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    let format = cli.format();
    let outcome = match cli.command {
        Command::Mu { ref spec, ref tol } => cmd_mu(spec, tol.as_deref(), format),
        Command::Series { ref spec, order, verify, budget } => {
            cmd_series(spec, order, verify, budget, format)
        }
        Command::Enumerate { ref graph, max_len } => cmd_enumerate(graph, max_len, format),
        Command::Table { ref spec, ref param, ref tol } => {
            cmd_table(spec, param, tol.as_deref(), format)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

// ---------------------------------------------------------------------
// Product specs

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Complete,
    Cycle,
    Ladder,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Ladder => "ladder",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SizeArg {
    Value(usize),
    Param(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorDecl {
    Family { kind: FamilyKind, size: SizeArg },
    File(PathBuf),
    Rational { num: IntPoly, den: IntPoly },
}

impl FactorDecl {
    /// Canonical one-line description, used in output headers.
    pub fn describe(&self) -> String {
        match self {
            FactorDecl::Family { kind, size } => match size {
                SizeArg::Value(n) => format!("{kind} {n}"),
                SizeArg::Param(p) => format!("{kind} ${p}"),
            },
            FactorDecl::File(path) => format!("file {}", path.display()),
            FactorDecl::Rational { num, den } => format!("rational ({num})/({den})"),
        }
    }

    fn param_name(&self) -> Option<&str> {
        match self {
            FactorDecl::Family { size: SizeArg::Param(p), .. } => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpecOptions {
    pub tol: Option<Rat>,
    pub series_order: Option<usize>,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductSpec {
    pub factors: Vec<FactorDecl>,
    pub options: SpecOptions,
}

/// Parses the spec grammar documented at module level.
pub fn parse_product_spec(text: &str, path: &str) -> Result<ProductSpec, CliError> {
    let mut factors = Vec::new();
    let mut options = SpecOptions::default();
    let err = |line: usize, message: String| CliError::Spec {
        path: path.to_string(),
        line,
        message,
    };
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "factor" => factors.push(parse_factor(&tokens[1..], line_no, path)?),
            "option" => parse_option(&tokens[1..], &mut options, line_no, path)?,
            other => {
                return Err(err(
                    line_no,
                    format!("unknown directive '{other}' (expected 'factor' or 'option')"),
                ))
            }
        }
    }
    if factors.len() < 2 {
        return Err(CliError::SpecFile {
            path: path.to_string(),
            message: format!("a free product needs at least 2 factors, found {}", factors.len()),
        });
    }
    Ok(ProductSpec { factors, options })
}

fn parse_factor(args: &[&str], line: usize, path: &str) -> Result<FactorDecl, CliError> {
    let err = |message: String| CliError::Spec { path: path.to_string(), line, message };
    let kind = match args.first() {
        None => return Err(err("factor needs a kind".into())),
        Some(&"complete") => FamilyKind::Complete,
        Some(&"cycle") => FamilyKind::Cycle,
        Some(&"ladder") => FamilyKind::Ladder,
        Some(&"file") => {
            let [_, path_arg] = args else {
                return Err(err("usage: factor file <path>".into()));
            };
            return Ok(FactorDecl::File(PathBuf::from(path_arg)));
        }
        Some(&"rational") => {
            let [_, num_arg, den_arg] = args else {
                return Err(err("usage: factor rational num=[c0,c1,...] den=[c0,c1,...]".into()));
            };
            let num = parse_coeff_list(num_arg, "num").map_err(&err)?;
            let den = parse_coeff_list(den_arg, "den").map_err(&err)?;
            return Ok(FactorDecl::Rational { num, den });
        }
        Some(other) => return Err(err(format!("unknown factor kind '{other}'"))),
    };
    let [_, size_arg] = args else {
        return Err(err(format!("usage: factor {kind} <size>")));
    };
    let size = if let Some(name) = size_arg.strip_prefix('$') {
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(format!("invalid parameter name '{size_arg}'")));
        }
        SizeArg::Param(name.to_string())
    } else {
        SizeArg::Value(
            size_arg
                .parse()
                .map_err(|_| err(format!("size '{size_arg}' is not a nonnegative integer")))?,
        )
    };
    Ok(FactorDecl::Family { kind, size })
}

fn parse_coeff_list(arg: &str, key: &str) -> Result<IntPoly, String> {
    let body = arg
        .strip_prefix(&format!("{key}=["))
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| format!("expected {key}=[c0,c1,...] with no spaces, got '{arg}'"))?;
    let mut coeffs = Vec::new();
    if !body.is_empty() {
        for piece in body.split(',') {
            let c: Int = piece
                .parse()
                .map_err(|_| format!("bad integer coefficient '{piece}' in {key}"))?;
            coeffs.push(c);
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn parse_option(
    args: &[&str],
    options: &mut SpecOptions,
    line: usize,
    path: &str,
) -> Result<(), CliError> {
    let err = |message: String| CliError::Spec { path: path.to_string(), line, message };
    let [key, value] = args else {
        return Err(err("usage: option <name> <value>".into()));
    };
    match *key {
        "tol" => {
            let tol = parse_rational(value)
                .filter(Rat::is_positive)
                .ok_or_else(|| err(format!("tol '{value}' is not a positive rational")))?;
            if options.tol.replace(tol).is_some() {
                return Err(err("duplicate option tol".into()));
            }
        }
        "series-order" => {
            let order = value
                .parse()
                .map_err(|_| err(format!("series-order '{value}' is not an integer")))?;
            if options.series_order.replace(order).is_some() {
                return Err(err("duplicate option series-order".into()));
            }
        }
        "budget" => {
            let budget = value
                .parse()
                .map_err(|_| err(format!("budget '{value}' is not an integer")))?;
            if options.budget.replace(budget).is_some() {
                return Err(err("duplicate option budget".into()));
            }
        }
        other => return Err(err(format!("unknown option '{other}'"))),
    }
    Ok(())
}

/// Parses a rational from `p/q`, integer, decimal, or scientific form
/// (`1e-12`, `2.5e-3`).
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let base = if let Some((n, d)) = mantissa.split_once('/') {
        if exponent != 0 {
            return None;
        }
        let n: Int = n.parse().ok()?;
        let d: Int = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Rat::new(n, d)
    } else if let Some((int_part, frac_part)) = mantissa.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let whole: Int = match int_part {
            "" | "-" | "+" => Int::zero(),
            other => other.parse().ok()?,
        };
        let frac: Int = frac_part.parse().ok()?;
        let scale = pow10(frac_part.len());
        let magnitude = whole.abs() * &scale + frac;
        let v = Rat::new(magnitude, scale);
        if negative {
            -v
        } else {
            v
        }
    } else {
        Rat::from_integer(mantissa.parse().ok()?)
    };
    Some(match exponent.cmp(&0) {
        std::cmp::Ordering::Equal => base,
        std::cmp::Ordering::Greater => base * Rat::from_integer(pow10(exponent as usize)),
        std::cmp::Ordering::Less => base / Rat::from_integer(pow10(-exponent as usize)),
    })
}

fn pow10(n: usize) -> Int {
    num_traits::pow(Int::from(10), n)
}

/// Renders a float with [`FLOAT_DIGITS`] significant digits, trailing
/// zeros trimmed.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-9..=15).contains(&magnitude) {
        return format!("{:.*e}", FLOAT_DIGITS - 1, x);
    }
    let decimals = (FLOAT_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

// ---------------------------------------------------------------------
// Factor resolution

type Bindings = HashMap<String, usize>;

fn resolve_graph(
    kind: &FamilyKind,
    n: usize,
) -> Result<RootedGraph, GraphError> {
    match kind {
        FamilyKind::Complete => build_complete(n),
        // The 2-cycle is the paper convention for the single edge.
        FamilyKind::Cycle if n == 2 => build_complete(2),
        FamilyKind::Cycle => build_cycle(n),
        FamilyKind::Ladder => build_ladder_segment(n),
    }
}

fn factor_graph(decl: &FactorDecl, bindings: &Bindings) -> Result<Option<RootedGraph>, CliError> {
    match decl {
        FactorDecl::Family { kind, size } => {
            let n = match size {
                SizeArg::Value(v) => *v,
                SizeArg::Param(p) => *bindings.get(p).ok_or_else(|| {
                    CliError::Usage(format!(
                        "spec uses parameter ${p}; run the table command with --param {p}=a..b"
                    ))
                })?,
            };
            let graph = resolve_graph(kind, n)
                .map_err(|e| CliError::Usage(format!("factor {kind} {n}: {e}")))?;
            Ok(Some(graph))
        }
        FactorDecl::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let graph = parse_graph(&text).map_err(|source| CliError::GraphFile {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Some(graph))
        }
        FactorDecl::Rational { .. } => Ok(None),
    }
}

fn resolve_factor(decl: &FactorDecl, bindings: &Bindings) -> Result<FactorGenFun, CliError> {
    match decl {
        FactorDecl::Rational { num, den } => Ok(genfun_from_rational(num, den)?),
        _ => {
            let graph = factor_graph(decl, bindings)?.expect("family and file yield graphs");
            Ok(genfun_from_counts(&factor_saw_counts(&graph)))
        }
    }
}

fn resolve_all(decls: &[FactorDecl], bindings: &Bindings) -> Result<Vec<FactorGenFun>, CliError> {
    decls.iter().map(|d| resolve_factor(d, bindings)).collect()
}

fn load_spec(path: &Path) -> Result<ProductSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_product_spec(&text, &path.display().to_string())
}

fn solve_options(
    cli_tol: Option<&str>,
    spec_tol: Option<&Rat>,
) -> Result<SolveOptions, CliError> {
    let mut options = SolveOptions::default();
    if let Some(s) = cli_tol {
        options.tol = parse_rational(s)
            .filter(Rat::is_positive)
            .ok_or_else(|| CliError::Usage(format!("--tol '{s}' is not a positive rational")))?;
    } else if let Some(t) = spec_tol {
        options.tol = t.clone();
    }
    Ok(options)
}

fn effective_budget(cli: Option<u64>, spec: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = cli {
        return Ok(b);
    }
    if let Ok(s) = std::env::var("CONNECTIVE_BUDGET") {
        return s.trim().parse().map_err(|_| {
            CliError::Usage(format!("CONNECTIVE_BUDGET '{s}' is not a nonnegative integer"))
        });
    }
    Ok(spec.unwrap_or(DEFAULT_NODE_BUDGET))
}

fn require_unparameterized(spec: &ProductSpec) -> Result<(), CliError> {
    if let Some(p) = spec.factors.iter().find_map(FactorDecl::param_name) {
        return Err(CliError::Usage(format!(
            "spec uses parameter ${p}; run the table command with --param {p}=a..b"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Output shapes

#[derive(Serialize)]
struct IntervalOut {
    lo: String,
    hi: String,
    approx: String,
    exact: bool,
}

impl IntervalOut {
    fn new(lo: &Rat, hi: &Rat) -> Self {
        let mid = ((lo + hi) / Rat::from_integer(Int::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN);
        Self {
            lo: lo.to_string(),
            hi: hi.to_string(),
            approx: format_sig(mid),
            exact: lo == hi,
        }
    }
}

#[derive(Serialize)]
struct DiagnosticOut {
    name: String,
    status: String,
    detail: String,
}

fn status_str(status: DiagStatus) -> &'static str {
    match status {
        DiagStatus::Pass => "pass",
        DiagStatus::Boundary => "boundary",
        DiagStatus::Fail => "fail",
    }
}

#[derive(Serialize)]
struct MuOutput {
    command: &'static str,
    factors: Vec<String>,
    z_star: IntervalOut,
    mu: IntervalOut,
    witness_denominator: Vec<String>,
    amplitude: Option<IntervalOut>,
    certified: bool,
    boundary: bool,
    diagnostics: Vec<DiagnosticOut>,
}

fn mu_output(spec: &ProductSpec, result: &ConnectiveResult) -> MuOutput {
    MuOutput {
        command: "mu",
        factors: spec.factors.iter().map(FactorDecl::describe).collect(),
        z_star: IntervalOut::new(result.z_star().lo(), result.z_star().hi()),
        mu: IntervalOut::new(result.mu_lo(), result.mu_hi()),
        witness_denominator: result
            .witness_poly()
            .coeffs()
            .iter()
            .map(Int::to_string)
            .collect(),
        amplitude: result.amplitude().map(|a| IntervalOut::new(a.lo(), a.hi())),
        certified: result.certified(),
        boundary: result.boundary_flagged(),
        diagnostics: result
            .diagnostics()
            .iter()
            .map(|d| DiagnosticOut {
                name: d.name.to_string(),
                status: status_str(d.status).to_string(),
                detail: d.detail.clone(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct SeriesRow {
    n: usize,
    sigma: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct SeriesOutput {
    command: &'static str,
    factors: Vec<String>,
    order: usize,
    verified: Option<bool>,
    rows: Vec<SeriesRow>,
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct EnumerateOutput {
    command: &'static str,
    graph: String,
    rows: Vec<CountRow>,
}

#[derive(Serialize)]
struct TableRow {
    value: usize,
    mu: IntervalOut,
    certified: bool,
    boundary: bool,
}

#[derive(Serialize)]
struct TableOutput {
    command: &'static str,
    factors: Vec<String>,
    param: String,
    rows: Vec<TableRow>,
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output structs always serialize")
    );
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

// ---------------------------------------------------------------------
// Commands

fn cmd_mu(spec_path: &Path, tol: Option<&str>, format: OutputFormat) -> Result<i32, CliError> {
    let spec = load_spec(spec_path)?;
    require_unparameterized(&spec)?;
    let factors = resolve_all(&spec.factors, &Bindings::new())?;
    let options = solve_options(tol, spec.options.tol.as_ref())?;
    let result = connective_constant(&factors, &options)?;
    let out = mu_output(&spec, &result);
    match format {
        OutputFormat::Json => print_json(&out),
        OutputFormat::Csv => {
            println!("field,value");
            println!("factors,{}", csv_escape(&out.factors.join(" * ")));
            println!("z_star_lo,{}", csv_escape(&out.z_star.lo));
            println!("z_star_hi,{}", csv_escape(&out.z_star.hi));
            println!("z_star,{}", out.z_star.approx);
            println!("mu_lo,{}", csv_escape(&out.mu.lo));
            println!("mu_hi,{}", csv_escape(&out.mu.hi));
            println!("mu,{}", out.mu.approx);
            match &out.amplitude {
                Some(a) => println!("amplitude,{}", a.approx),
                None => println!("amplitude,"),
            }
            println!("certified,{}", out.certified);
            for d in &out.diagnostics {
                println!("check_{},{}", d.name, d.status);
            }
        }
        OutputFormat::Text => {
            println!("product: {}", out.factors.join(" * "));
            println!(
                "z_*  = {} (in [{}, {}]{})",
                out.z_star.approx,
                out.z_star.lo,
                out.z_star.hi,
                if out.z_star.exact { ", exact" } else { "" }
            );
            println!(
                "mu   = {} (in [{}, {}]{})",
                out.mu.approx,
                out.mu.lo,
                out.mu.hi,
                if out.mu.exact { ", exact" } else { "" }
            );
            match &out.amplitude {
                Some(a) => println!("A    = {} (sigma_n ~ A mu^n)", a.approx),
                None => println!("A    = (no certified enclosure)"),
            }
            println!(
                "witness denominator coefficients: [{}]",
                out.witness_denominator.join(", ")
            );
            println!("certified: {}", if out.certified { "yes" } else { "NO" });
            for d in &out.diagnostics {
                println!("  [{}] {}: {}", d.status, d.name, d.detail);
            }
        }
    }
    Ok(if result.certified() { 0 } else { 2 })
}

fn cmd_series(
    spec_path: &Path,
    order: Option<usize>,
    verify: bool,
    budget: Option<u64>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    let spec = load_spec(spec_path)?;
    require_unparameterized(&spec)?;
    let factors = resolve_all(&spec.factors, &Bindings::new())?;
    let order = order
        .or(spec.options.series_order)
        .unwrap_or(DEFAULT_DISPLAY_ORDER);
    let series = crate::genfun::expand_m(&factors, order)?;

    let oracle = if verify {
        let mut graphs = Vec::with_capacity(spec.factors.len());
        for decl in &spec.factors {
            match factor_graph(decl, &Bindings::new())? {
                Some(g) => graphs.push(g),
                None => {
                    return Err(CliError::Usage(
                        "--verify needs enumerable factors; rational factors cannot be \
                         brute-forced"
                            .to_string(),
                    ))
                }
            }
        }
        let node_budget = effective_budget(budget, spec.options.budget)?;
        let counts = free_product_saw_counts_with(
            &graphs,
            order,
            &EnumerateOptions { node_budget, allow_deep: false },
        )?;
        Some(counts)
    } else {
        None
    };

    let mut all_match = true;
    let mut rows = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let sigma = series.coeff(n);
        debug_assert!(sigma.is_integer(), "product SAW series is integral");
        let sigma_str = sigma.to_integer().to_string();
        let (oracle_str, matches) = match &oracle {
            Some(counts) => {
                let count = counts.get(n);
                let ok = Int::from(count.clone()) == sigma.to_integer();
                all_match &= ok;
                (Some(count.to_string()), Some(ok))
            }
            None => (None, None),
        };
        rows.push(SeriesRow { n, sigma: sigma_str, oracle: oracle_str, matches });
    }

    let out = SeriesOutput {
        command: "series",
        factors: spec.factors.iter().map(FactorDecl::describe).collect(),
        order,
        verified: oracle.as_ref().map(|_| all_match),
        rows,
    };
    match format {
        OutputFormat::Json => print_json(&out),
        OutputFormat::Csv => {
            if verify {
                println!("n,sigma,oracle,match");
                for r in &out.rows {
                    println!(
                        "{},{},{},{}",
                        r.n,
                        r.sigma,
                        r.oracle.as_deref().unwrap_or(""),
                        r.matches.map_or(String::new(), |m| m.to_string())
                    );
                }
            } else {
                println!("n,sigma");
                for r in &out.rows {
                    println!("{},{}", r.n, r.sigma);
                }
            }
        }
        OutputFormat::Text => {
            println!("product: {}", out.factors.join(" * "));
            for r in &out.rows {
                match (&r.oracle, r.matches) {
                    (Some(o), Some(m)) => println!(
                        "sigma_{} = {} (oracle {}, {})",
                        r.n,
                        r.sigma,
                        o,
                        if m { "ok" } else { "MISMATCH" }
                    ),
                    _ => println!("sigma_{} = {}", r.n, r.sigma),
                }
            }
        }
    }
    if verify && !all_match {
        eprintln!("error: series verification mismatch — exact expansion and brute-force count disagree");
        return Ok(3);
    }
    Ok(0)
}

fn cmd_enumerate(
    graph_arg: &str,
    max_len: Option<usize>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    let (description, graph) = match graph_arg.split_once(':') {
        Some((kind, size)) => {
            let n: usize = size.parse().map_err(|_| {
                CliError::Usage(format!("graph size '{size}' is not a nonnegative integer"))
            })?;
            let kind = match kind {
                "complete" => FamilyKind::Complete,
                "cycle" => FamilyKind::Cycle,
                "ladder" => FamilyKind::Ladder,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown graph family '{other}' (expected complete, cycle, or ladder)"
                    )))
                }
            };
            let graph = resolve_graph(&kind, n)
                .map_err(|e| CliError::Usage(format!("graph {kind} {n}: {e}")))?;
            (format!("{kind} {n}"), graph)
        }
        None => {
            let text = std::fs::read_to_string(graph_arg).map_err(|source| CliError::Io {
                path: graph_arg.to_string(),
                source,
            })?;
            let graph = parse_graph(&text).map_err(|source| CliError::GraphFile {
                path: graph_arg.to_string(),
                source,
            })?;
            (format!("file {graph_arg}"), graph)
        }
    };
    let counts = factor_saw_counts(&graph);
    let last = max_len.unwrap_or_else(|| counts.max_length());
    let rows: Vec<CountRow> = (0..=last)
        .map(|n| CountRow { n, count: counts.get(n).to_string() })
        .collect();
    let out = EnumerateOutput { command: "enumerate", graph: description, rows };
    match format {
        OutputFormat::Json => print_json(&out),
        OutputFormat::Csv => {
            println!("n,count");
            for r in &out.rows {
                println!("{},{}", r.n, r.count);
            }
        }
        OutputFormat::Text => {
            println!("graph: {}", out.graph);
            for r in &out.rows {
                println!("sigma_{} = {}", r.n, r.count);
            }
        }
    }
    Ok(0)
}

fn cmd_table(
    spec_path: &Path,
    param: &str,
    tol: Option<&str>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    let spec = load_spec(spec_path)?;
    let (name, lo, hi) = parse_param_range(param)?;
    let mentioned: Vec<&str> = spec.factors.iter().filter_map(FactorDecl::param_name).collect();
    if mentioned.is_empty() {
        return Err(CliError::Usage(format!(
            "spec has no ${name} placeholder for the table command"
        )));
    }
    if let Some(other) = mentioned.iter().find(|&&p| p != name) {
        return Err(CliError::Usage(format!(
            "spec parameter ${other} does not match --param {name}"
        )));
    }
    let options = solve_options(tol, spec.options.tol.as_ref())?;

    let mut rows = Vec::with_capacity(hi - lo + 1);
    let mut all_certified = true;
    for value in lo..=hi {
        let mut bindings = Bindings::new();
        bindings.insert(name.to_string(), value);
        let factors = resolve_all(&spec.factors, &bindings)?;
        let result = connective_constant(&factors, &options)?;
        all_certified &= result.certified();
        rows.push(TableRow {
            value,
            mu: IntervalOut::new(result.mu_lo(), result.mu_hi()),
            certified: result.certified(),
            boundary: result.boundary_flagged(),
        });
    }
    let out = TableOutput {
        command: "table",
        factors: spec.factors.iter().map(FactorDecl::describe).collect(),
        param: name.to_string(),
        rows,
    };
    match format {
        OutputFormat::Json => print_json(&out),
        OutputFormat::Csv => {
            println!("{},mu,mu_lo,mu_hi,certified", out.param);
            for r in &out.rows {
                println!(
                    "{},{},{},{},{}",
                    r.value,
                    r.mu.approx,
                    csv_escape(&r.mu.lo),
                    csv_escape(&r.mu.hi),
                    r.certified
                );
            }
        }
        OutputFormat::Text => {
            println!("product: {}", out.factors.join(" * "));
            for r in &out.rows {
                println!(
                    "{} = {:>4}: mu = {}{}",
                    out.param,
                    r.value,
                    r.mu.approx,
                    if r.certified { "" } else { "  (NOT CERTIFIED)" }
                );
            }
        }
    }
    Ok(if all_certified { 0 } else { 2 })
}

fn parse_param_range(param: &str) -> Result<(&str, usize, usize), CliError> {
    let usage = || {
        CliError::Usage(format!(
            "--param '{param}' must look like name=a..b with integers a <= b"
        ))
    };
    let (name, range) = param.split_once('=').ok_or_else(usage)?;
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(usage());
    }
    let (a, b) = range.split_once("..").ok_or_else(usage)?;
    let lo: usize = a.parse().map_err(|_| usage())?;
    let hi: usize = b.parse().map_err(|_| usage())?;
    if lo > hi {
        return Err(usage());
    }
    Ok((name, lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-3"), Some(rat(-3, 1)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("1e-12"), Some(rat(1, 1_000_000_000_000)));
        assert_eq!(parse_rational("2.5e-3"), Some(rat(1, 400)));
        assert_eq!(parse_rational("2e3"), Some(rat(2000, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/2e3"), None);
        assert_eq!(parse_rational("0.2.5"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn formats_significant_digits() {
        assert_eq!(format_sig(1.7692923542386314), "1.76929");
        assert_eq!(format_sig(0.5651977173836394), "0.565198");
        assert_eq!(format_sig(4.922643892936145), "4.92264");
        assert_eq!(format_sig(1.998689641), "1.99869");
        assert_eq!(format_sig(2.0), "2");
        assert_eq!(format_sig(1.5), "1.5");
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-0.001234567), "-0.00123457");
        assert_eq!(format_sig(1.0e20), "1.00000e20");
    }

    #[test]
    fn parses_full_spec() {
        let text = "\
# product of an edge and a triangle
factor complete 2
factor cycle 3    # trailing comment
option tol 1e-9
option series-order 8
option budget 5000
";
        let spec = parse_product_spec(text, "test.spec").unwrap();
        assert_eq!(spec.factors.len(), 2);
        assert_eq!(
            spec.factors[0],
            FactorDecl::Family { kind: FamilyKind::Complete, size: SizeArg::Value(2) }
        );
        assert_eq!(spec.options.tol, Some(rat(1, 1_000_000_000)));
        assert_eq!(spec.options.series_order, Some(8));
        assert_eq!(spec.options.budget, Some(5000));
    }

    #[test]
    fn parses_rational_and_param_factors() {
        let text = "\
factor rational num=[0,4,4,4] den=[1,0,-2]
factor cycle $n
";
        let spec = parse_product_spec(text, "t").unwrap();
        assert_eq!(
            spec.factors[0],
            FactorDecl::Rational { num: int_poly(&[0, 4, 4, 4]), den: int_poly(&[1, 0, -2]) }
        );
        assert_eq!(
            spec.factors[1],
            FactorDecl::Family { kind: FamilyKind::Cycle, size: SizeArg::Param("n".into()) }
        );
        assert_eq!(spec.factors[1].describe(), "cycle $n");
    }

    #[test]
    fn spec_errors_carry_line_numbers() {
        let err = parse_product_spec("factor complete 2\nfrobnicate\n", "p.spec").unwrap_err();
        match err {
            CliError::Spec { line, .. } => assert_eq!(line, 2),
            other => panic!("wrong error {other:?}"),
        }
        let err = parse_product_spec("factor complete two\nfactor complete 2\n", "p").unwrap_err();
        assert!(matches!(err, CliError::Spec { line: 1, .. }));
        let err = parse_product_spec("factor complete 2\n", "p").unwrap_err();
        assert!(matches!(err, CliError::SpecFile { .. }));
        let err =
            parse_product_spec("factor complete 2\noption tol 1e-9\noption tol 1e-6\nfactor complete 2\n", "p")
                .unwrap_err();
        assert!(matches!(err, CliError::Spec { line: 3, .. }));
        let err = parse_product_spec("factor rational num=[0,1] den=[1,0\nfactor complete 2\n", "p")
            .unwrap_err();
        assert!(matches!(err, CliError::Spec { line: 1, .. }));
    }

    #[test]
    fn resolves_family_factors() {
        let k3 = resolve_factor(
            &FactorDecl::Family { kind: FamilyKind::Complete, size: SizeArg::Value(3) },
            &Bindings::new(),
        )
        .unwrap();
        assert_eq!(k3.numerator(), &int_poly(&[0, 2, 2]));
        // cycle 2 aliases to the single edge.
        let c2 = resolve_factor(
            &FactorDecl::Family { kind: FamilyKind::Cycle, size: SizeArg::Value(2) },
            &Bindings::new(),
        )
        .unwrap();
        assert_eq!(c2.numerator(), &int_poly(&[0, 1]));
        // Unbound parameter is a usage error.
        let err = resolve_factor(
            &FactorDecl::Family { kind: FamilyKind::Cycle, size: SizeArg::Param("n".into()) },
            &Bindings::new(),
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert_eq!(err.exit_code(), 64);
        // Parameter bound: cycle 5.
        let mut b = Bindings::new();
        b.insert("n".into(), 5);
        let c5 = resolve_factor(
            &FactorDecl::Family { kind: FamilyKind::Cycle, size: SizeArg::Param("n".into()) },
            &b,
        )
        .unwrap();
        assert_eq!(c5.numerator(), &int_poly(&[0, 2, 2, 2, 2]));
    }

    #[test]
    fn exit_codes_by_error_class() {
        let usage = CliError::Usage("x".into());
        assert_eq!(usage.exit_code(), 64);
        let genfun = CliError::GenFun(GenFunError::TooFewFactors(1));
        assert_eq!(genfun.exit_code(), 64);
        let io = CliError::Io {
            path: "missing".into(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "gone"),
        };
        assert_eq!(io.exit_code(), 1);
        let enumerate = CliError::Enumerate(EnumerateError::BudgetExhausted { budget: 1 });
        assert_eq!(enumerate.exit_code(), 1);
    }

    #[test]
    fn parses_param_ranges() {
        assert_eq!(parse_param_range("n=4..10").unwrap(), ("n", 4, 10));
        assert_eq!(parse_param_range("size_a=7..7").unwrap(), ("size_a", 7, 7));
        assert!(parse_param_range("n=10..4").is_err());
        assert!(parse_param_range("n=4-10").is_err());
        assert!(parse_param_range("=4..10").is_err());
        assert!(parse_param_range("n:4..10").is_err());
    }

    #[test]
    fn interval_out_marks_exact_values() {
        let one = Rat::one();
        let out = IntervalOut::new(&one, &one);
        assert!(out.exact);
        assert_eq!(out.approx, "1");
        assert_eq!(out.lo, "1");
        let wide = IntervalOut::new(&rat(1, 2), &rat(3, 4));
        assert!(!wide.exact);
        assert_eq!(wide.lo, "1/2");
        assert_eq!(wide.hi, "3/4");
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
