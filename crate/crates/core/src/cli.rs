//! Command-line front end. `run` parses arguments, dispatches, writes to the
//! given sinks and returns the process exit code.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 computation precondition, 4 internal invariant breach.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::burau::{alexander_polynomial, burau_at_minus1, burau_word, knot_determinant};
use crate::error::Error;
use crate::expr::parse_expr;
use crate::ordering::{bh_fdtc, dehornoy_floor, fdtc_with, FdtcEstimate, FdtcOptions, DEFAULT_STEP_LIMIT};
use crate::topology::{h1_invariant_factors, h1_order, page_of, theorem12_report, verify_prop41, FdtcParams};

/// Table output stops at this `k`; JSON output has no cap.
pub const TABLE_K_MAX: u64 = 50;

#[derive(Parser, Debug)]
#[command(name = "braidbook", version, about = "Exact braid, Burau and branched-cover invariants")]
pub struct Cli {
    /// Number of strands
    #[arg(short = 'n', long = "strands", global = true, value_parser = clap::value_parser!(u64).range(1..=10_000))]
    pub strands: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Handle reductions allowed per comparison
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_LIMIT as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub step_limit: u64,

    /// Largest power used by the FDTC sandwich
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub max_power: u32,

    /// Denominator bound for pinning an FDTC value
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub denom_bound: Option<i64>,

    /// Largest k for `verify`
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MarkovMove {
    #[value(name = "stab+")]
    StabPlus,
    #[value(name = "stab-")]
    StabMinus,
    #[value(name = "destab")]
    Destab,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse an expression and print the flattened word
    Parse { expr: String },
    /// Word structure, knot invariants and page data
    Invariants { expr: String },
    /// Reduced Burau matrix, symbolic or at t = -1
    Burau {
        expr: String,
        #[arg(long, conflicts_with = "at_minus_one")]
        symbolic: bool,
        #[arg(long)]
        at_minus_one: bool,
    },
    /// Normalized Alexander polynomial of the closure
    Alexander { expr: String },
    /// Interval for the fractional Dehn twist coefficient
    Fdtc {
        expr: String,
        /// Require odd n and report the lifted value
        #[arg(long)]
        bh: bool,
    },
    /// Dehornoy floor
    Floor { expr: String },
    /// Apply a Markov move
    Markov {
        #[arg(value_enum)]
        r#move: MarkovMove,
        expr: String,
    },
    /// Check the determinant formula and the genus comparison
    Verify {
        /// Largest k for the genus comparison, which is far costlier than the determinant rows
        #[arg(long, default_value_t = 5)]
        theorem_k_max: u64,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// A rendered result: `json` for `--format json`, `table` otherwise.
struct Output {
    json: Value,
    table: Vec<(String, String)>,
    failed: bool,
}

impl Output {
    fn new(json: Value, table: Vec<(String, String)>) -> Self {
        Output { json, table, failed: false }
    }
}

fn row(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, err) {
        Ok(output) => {
            let _ = match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&output.json).unwrap()),
                Format::Table => write_table(out, &output.table),
            };
            i32::from(output.failed)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() { 4 } else { 3 }
        }
    }
}

fn write_table(out: &mut dyn Write, rows: &[(String, String)]) -> std::io::Result<()> {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        if k.is_empty() {
            writeln!(out, "{v}")?;
        } else {
            writeln!(out, "{k:<width$}  {v}")?;
        }
    }
    Ok(())
}

fn word(cli: &Cli, text: &str) -> std::result::Result<BraidWord, Failure> {
    let n = cli.strands.ok_or_else(|| Failure::Usage("-n/--strands is required".into()))? as usize;
    parse_expr(text, n).and_then(|e| e.to_word(n)).map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Parse { expr } => cmd_parse(cli, expr),
        Command::Invariants { expr } => cmd_invariants(cli, expr),
        Command::Burau { expr, at_minus_one, .. } => cmd_burau(cli, expr, *at_minus_one),
        Command::Alexander { expr } => cmd_alexander(cli, expr),
        Command::Fdtc { expr, bh } => cmd_fdtc(cli, expr, *bh),
        Command::Floor { expr } => cmd_floor(cli, expr),
        Command::Markov { r#move, expr } => cmd_markov(cli, expr, *r#move),
        Command::Verify { theorem_k_max } => cmd_verify(cli, *theorem_k_max, err),
    }
}

fn cmd_parse(cli: &Cli, text: &str) -> Outcome {
    let n = cli.strands.ok_or_else(|| Failure::Usage("-n/--strands is required".into()))? as usize;
    let expr = parse_expr(text, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let w = expr.to_word(n).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Output::new(
        json!({ "expr": expr.to_string(), "word": w, "length": w.len() }),
        vec![row("expr", &expr), row("strands", n), row("length", w.len()), row("word", &w)],
    ))
}

fn cmd_invariants(cli: &Cli, text: &str) -> Outcome {
    let w = word(cli, text)?;
    let n = w.strands();
    let perm = w.permutation();
    let components = perm.cycle_count();
    let page = page_of(n)?;
    let knot = components == 1;
    let alexander = if knot { Some(alexander_polynomial(&w)?) } else { None };
    let determinant = if knot { Some(knot_determinant(&w)?) } else { None };
    let odd_knot = knot && n % 2 == 1;
    let h1 = if odd_knot { Some(h1_order(&w)?) } else { None };
    let h1_factors = if odd_knot { Some(h1_invariant_factors(&w)?) } else { None };

    let mut table = vec![
        row("strands", n),
        row("length", w.len()),
        row("exponent_sum", w.exponent_sum()),
        row("cycle_type", format!("{:?}", perm.cycle_type())),
        row("components", components),
        row("positive", w.is_positive()),
    ];
    if let (Some(a), Some(d)) = (&alexander, &determinant) {
        table.push(row("alexander", a));
        table.push(row("determinant", d));
    }
    table.push(row("page_genus", page.genus));
    table.push(row("page_boundary", page.boundary_components));
    table.push(row("page_euler", page.euler_characteristic));
    if let (Some(h), Some(f)) = (&h1, &h1_factors) {
        table.push(row("h1_order", h));
        let f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        table.push(row("h1_factors", format!("[{}]", f.join(", "))));
    }
    let json = json!({
        "strands": n,
        "length": w.len(),
        "exponent_sum": w.exponent_sum(),
        "cycle_type": perm.cycle_type(),
        "components": components,
        "positive": w.is_positive(),
        "alexander": alexander,
        "determinant": determinant.map(|d| d.to_string()),
        "page": page,
        "h1_order": h1.map(|d| d.to_string()),
        "h1_factors": h1_factors.map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    });
    Ok(Output::new(json, table))
}

fn cmd_burau(cli: &Cli, text: &str, at_minus_one: bool) -> Outcome {
    let w = word(cli, text)?;
    let (json, shown) = if at_minus_one {
        let m = burau_at_minus1(&w);
        (m.to_json(), m.to_string())
    } else {
        let m = burau_word(&w);
        (m.to_json(), m.to_string())
    };
    let mut table = vec![row("ring", if at_minus_one { "int" } else { "laurent" })];
    table.extend(shown.lines().map(|l| row("", l)));
    Ok(Output::new(json, table))
}

fn cmd_alexander(cli: &Cli, text: &str) -> Outcome {
    let w = word(cli, text)?;
    let a = alexander_polynomial(&w)?;
    Ok(Output::new(json!({ "alexander": a }), vec![row("alexander", &a)]))
}

fn estimate_json(e: &FdtcEstimate) -> Value {
    serde_json::to_value(e).unwrap()
}

fn estimate_rows(prefix: &str, e: &FdtcEstimate) -> Vec<(String, String)> {
    let pinned = e.pinned.map_or("none".to_string(), |p| p.to_string());
    vec![
        row(&format!("{prefix}interval"), format!("[{}, {}]", e.lower, e.upper)),
        row(&format!("{prefix}pinned"), pinned),
    ]
}

fn cmd_fdtc(cli: &Cli, text: &str, bh: bool) -> Outcome {
    let w = word(cli, text)?;
    let n = w.strands();
    if bh && n % 2 == 0 {
        return Err(Error::EvenStrands("Birman-Hilden halving", n).into());
    }
    let opts = FdtcOptions {
        max_power: cli.max_power,
        denominator_bound: cli.denom_bound,
        step_limit: cli.step_limit as usize,
        ..FdtcOptions::default()
    };
    let est = fdtc_with(&w, &opts)?;
    let mut table = estimate_rows("", &est);
    table.push(row("power_used", est.power_used));
    let mut json = json!({ "fdtc": estimate_json(&est) });
    if n % 2 == 1 {
        let up = bh_fdtc(&est, n)?;
        table.extend(estimate_rows("bh_", &up));
        json["bh_fdtc"] = estimate_json(&up);
    }
    Ok(Output::new(json, table))
}

fn cmd_floor(cli: &Cli, text: &str) -> Outcome {
    let w = word(cli, text)?;
    let f = dehornoy_floor(&w, cli.step_limit as usize)?;
    Ok(Output::new(json!({ "floor": f }), vec![row("floor", f)]))
}

fn cmd_markov(cli: &Cli, text: &str, mv: MarkovMove) -> Outcome {
    let w = word(cli, text)?;
    let result = match mv {
        MarkovMove::StabPlus => w.markov_stabilize(true),
        MarkovMove::StabMinus => w.markov_stabilize(false),
        MarkovMove::Destab => w.markov_destabilize().ok_or_else(|| {
            Error::InvalidArgument(format!(
                "destabilization needs exactly one letter s{} or its inverse",
                w.strands().saturating_sub(1)
            ))
        })?,
    };
    Ok(Output::new(
        json!({ "word": result }),
        vec![row("strands", result.strands()), row("word", &result)],
    ))
}

fn cmd_verify(cli: &Cli, theorem_k_max: u64, err: &mut dyn Write) -> Outcome {
    let mut k_max = cli.k_max;
    if cli.format == Format::Table && k_max > TABLE_K_MAX {
        let _ = writeln!(err, "warning: table output caps k_max at {TABLE_K_MAX}");
        k_max = TABLE_K_MAX;
    }
    let rows = verify_prop41(k_max)?;
    let params = FdtcParams {
        max_power: cli.max_power,
        denominator_bound: cli.denom_bound,
        step_limit: cli.step_limit as usize,
    };
    let reports = (1..=k_max.min(theorem_k_max))
        .map(|k| theorem12_report(k as usize, &params))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let failed = !rows.iter().all(|r| r.passed()) || !reports.iter().all(|r| r.passed());

    let mut table = vec![row("", "k  predicted  det(2k+1,2k+3)  det(2k+3,2k+1)  status")];
    for r in &rows {
        let status = if r.passed() { "pass" } else { "FAIL" };
        table.push(row(
            "",
            format!("{:<2} {:>10} {:>15} {:>15}  {status}", r.k, r.predicted, r.det_narrow, r.det_wide),
        ));
    }
    table.push(row("", ""));
    table.push(row("", "k  genus(wide,narrow)  bh_fdtc  det_equal  alexander_equal  positive  status"));
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let pinned = r.fdtc_upstairs.pinned.map_or("none".to_string(), |p| p.to_string());
        table.push(row(
            "",
            format!(
                "{:<2} {:>18} {:>8} {:>10} {:>16} {:>9}  {status}",
                r.k,
                format!("({},{})", r.high_genus.page.genus, r.low_genus.page.genus),
                pinned,
                r.determinants_equal,
                r.alexander_equal,
                r.high_genus.stein_witness && r.low_genus.stein_witness,
            ),
        ));
    }
    let json = json!({ "prop41": rows, "theorem12": reports, "passed": !failed });
    let mut output = Output::new(json, table);
    output.failed = failed;
    Ok(output)
}
