//! Command-line front end: parses curves and resolution files, runs the
//! resolution / zeta / Hilbert / verification engines, and prints text or
//! a single JSON document (`--json`).
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3
//! verification mismatch.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use chilbert::jets::DEFAULT_JET_BUDGET;
use chilbert::laurent::{SpecializeMode, Specialized};
use chilbert::parse::parse_curve;
use chilbert::resfile::{parse_resolution_file, serialize_resolution};
use chilbert::resolve::{resolve, resolve_with_log, ResolutionData, ResolutionLog};
use chilbert::zeta::{denef_zeta, hilb_recursion, q_series_closed, LeadingTerm};

use report::*;

/// Environment variable overriding the default enumeration budget.
const BUDGET_ENV: &str = "CHILBERT_JET_BUDGET";

#[derive(Parser)]
#[command(
    name = "chilbert",
    version,
    about = "Exact zeta functions and Hilbert classes of plane curve singularities"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve the curve at the origin and print the decorated divisors.
    Resolve {
        /// Curve polynomial in x and y, e.g. "y^2 - x^3".
        curve: String,
        /// Also write the resolution data to this file.
        #[arg(long, value_name = "PATH")]
        save: Option<PathBuf>,
    },
    /// Print the contact-order zeta function.
    Zeta {
        /// Curve polynomial (or use --resolution).
        curve: Option<String>,
        /// Read resolution data from a file instead of resolving a curve.
        #[arg(long, value_name = "FILE", conflicts_with = "curve")]
        resolution: Option<PathBuf>,
    },
    /// Print the Hilbert classes H_k for 2 <= k <= K and the threshold.
    Hilb {
        /// Curve polynomial (or use --resolution).
        curve: Option<String>,
        /// Read resolution data from a file instead of resolving a curve.
        #[arg(long, value_name = "FILE", conflicts_with = "curve")]
        resolution: Option<PathBuf>,
        /// Largest contact order to compute.
        #[arg(long = "max-k", value_name = "K")]
        max_k: u64,
        /// euler, weight, or q=<integer>.
        #[arg(long, value_name = "MODE")]
        specialize: Option<String>,
    },
    /// Print the generating series of Hilbert classes: closed form and expansion.
    Qseries {
        /// Curve polynomial (or use --resolution).
        curve: Option<String>,
        /// Read resolution data from a file instead of resolving a curve.
        #[arg(long, value_name = "FILE", conflicts_with = "curve")]
        resolution: Option<PathBuf>,
        /// Expansion order for the printed coefficients.
        #[arg(long, value_name = "K", default_value_t = 8)]
        order: u32,
        /// Constant-term convention; "scaled" is kept for comparison and
        /// fails the round-trip identity.
        #[arg(long = "leading-term", value_enum, default_value_t = LeadingTermArg::Standard)]
        leading_term: LeadingTermArg,
    },
    /// Count jets over prime fields and compare with the predicted classes.
    Verify {
        /// Curve polynomial in x and y.
        curve: String,
        /// Comma-separated list of primes.
        #[arg(long, value_delimiter = ',', required = true, value_name = "P,...")]
        primes: Vec<u64>,
        /// Largest contact order to check.
        #[arg(long = "max-k", value_name = "K")]
        max_k: u64,
        /// Number of worker threads for the enumeration.
        #[arg(long, value_name = "J", default_value_t = 1)]
        jobs: usize,
        /// Cap on the declared search space p^(2(k-1)); overrides the
        /// CHILBERT_JET_BUDGET environment variable.
        #[arg(long, value_name = "B")]
        budget: Option<u128>,
        /// Take predictions from this resolution file instead of resolving
        /// the curve.
        #[arg(long, value_name = "FILE")]
        resolution: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LeadingTermArg {
    Standard,
    Scaled,
}

impl LeadingTermArg {
    fn core(self) -> LeadingTerm {
        match self {
            LeadingTermArg::Standard => LeadingTerm::Standard,
            LeadingTermArg::Scaled => LeadingTerm::Scaled,
        }
    }
    fn name(self) -> &'static str {
        match self {
            LeadingTermArg::Standard => "standard",
            LeadingTermArg::Scaled => "scaled",
        }
    }
}

/// Anything that stops a run, tagged for the exit-code contract.
enum Failure {
    Core(chilbert::Error),
    Usage(String),
    Io(String),
}

impl From<chilbert::Error> for Failure {
    fn from(e: chilbert::Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Core(e) => e.code(),
            Failure::Usage(_) => "UsageError",
            Failure::Io(_) => "IoError",
        }
    }
    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Io(m) => m.clone(),
        }
    }
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_usage() => 2,
            Failure::Core(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(all_match) => {
            if all_match {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(f) => {
            if cli.json {
                let doc = ErrorReport {
                    error: ErrorBody {
                        code: f.code(),
                        message: f.message(),
                    },
                };
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

/// Build the report for the subcommand; `Ok(false)` means a verification
/// mismatch (exit 3).
fn run(cli: &Cli) -> Result<bool, Failure> {
    let (report, all_match) = match &cli.command {
        Command::Resolve { curve, save } => (cmd_resolve(curve, save.as_deref())?, true),
        Command::Zeta { curve, resolution } => (cmd_zeta(curve, resolution)?, true),
        Command::Hilb {
            curve,
            resolution,
            max_k,
            specialize,
        } => (cmd_hilb(curve, resolution, *max_k, specialize.as_deref())?, true),
        Command::Qseries {
            curve,
            resolution,
            order,
            leading_term,
        } => (cmd_qseries(curve, resolution, *order, *leading_term)?, true),
        Command::Verify {
            curve,
            primes,
            max_k,
            jobs,
            budget,
            resolution,
        } => {
            let report = cmd_verify(curve, primes, *max_k, *jobs, *budget, resolution)?;
            let ok = match &report {
                Report::Verify(v) => v.all_match,
                _ => unreachable!(),
            };
            (report, ok)
        }
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
    } else {
        print_text(&report);
    }
    Ok(all_match)
}

/// Parse a curve expression or read a resolution file; returns the data
/// and a label naming the input.
fn load_input(
    curve: &Option<String>,
    resolution: &Option<PathBuf>,
) -> Result<(ResolutionData, String), Failure> {
    match (curve, resolution) {
        (Some(src), None) => {
            let parsed = parse_curve(src)?;
            let label = parsed.render();
            Ok((resolve(&parsed)?, label))
        }
        (None, Some(path)) => {
            let text = read_file(path)?;
            Ok((parse_resolution_file(&text)?, path.display().to_string()))
        }
        (None, None) => Err(Failure::Usage(
            "an input is required: give a curve polynomial or --resolution <FILE>".into(),
        )),
        (Some(_), Some(_)) => Err(Failure::Usage(
            "give either a curve polynomial or --resolution <FILE>, not both".into(),
        )),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn divisor_reports(res: &ResolutionData) -> Result<Vec<DivisorReport>, Failure> {
    res.divisors()
        .map(|d| {
            Ok(DivisorReport {
                id: d.id,
                n: d.n,
                nu: d.nu,
                m: d.m,
                strict: d.strict_meets,
                neighbors: d.neighbors.iter().copied().collect(),
                class_open: res.class_open(d.id)?.render("L"),
                class_strict: res.class_strict(d.id)?.render("L"),
            })
        })
        .collect()
}

fn blowup_reports(log: &ResolutionLog) -> Vec<BlowupReport> {
    log.blowups
        .iter()
        .map(|b| BlowupReport {
            id: b.new_id,
            centers: b.center_on.clone(),
            multiplicity: b.center_mult,
        })
        .collect()
}

fn cmd_resolve(curve: &str, save: Option<&Path>) -> Result<Report, Failure> {
    let parsed = parse_curve(curve)?;
    let (res, log) = resolve_with_log(&parsed)?;
    if let Some(path) = save {
        std::fs::write(path, serialize_resolution(&res))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(Report::Resolve(ResolveReport {
        curve: parsed.render(),
        ambient_dim: res.ambient_dim,
        origin_mult: res.origin_mult,
        smooth_branch: chilbert::resolve::has_smooth_branch(&res),
        threshold: chilbert::zeta::threshold(&res),
        divisors: divisor_reports(&res)?,
        edges: res.edges(),
        blowups: blowup_reports(&log),
    }))
}

fn cmd_zeta(curve: &Option<String>, resolution: &Option<PathBuf>) -> Result<Report, Failure> {
    let (res, input) = load_input(curve, resolution)?;
    let zeta = denef_zeta(&res)?;
    Ok(Report::Zeta(ZetaReport {
        input,
        zeta: zeta.render(),
    }))
}

fn parse_specialize(text: &str) -> Result<SpecializeMode, Failure> {
    match text {
        "euler" => Ok(SpecializeMode::Euler),
        "weight" => Ok(SpecializeMode::Weight),
        _ => {
            if let Some(q) = text.strip_prefix("q=") {
                let q: BigInt = q.parse().map_err(|_| {
                    Failure::Usage(format!("--specialize q=<integer>: bad integer `{q}`"))
                })?;
                Ok(SpecializeMode::PointCount(q))
            } else {
                Err(Failure::Usage(format!(
                    "--specialize takes euler, weight, or q=<integer>, not `{text}`"
                )))
            }
        }
    }
}

fn specialized_text(s: &Specialized) -> String {
    match s {
        Specialized::Int(n) => n.to_string(),
        Specialized::Poly(p) => p.render("t"),
    }
}

fn cmd_hilb(
    curve: &Option<String>,
    resolution: &Option<PathBuf>,
    max_k: u64,
    specialize: Option<&str>,
) -> Result<Report, Failure> {
    if max_k < 2 {
        return Err(Failure::Usage("--max-k must be at least 2".into()));
    }
    let mode = specialize.map(parse_specialize).transpose()?;
    let (res, input) = load_input(curve, resolution)?;
    let table = hilb_recursion(&res, max_k)?;
    let mut classes = Vec::new();
    for (k, class) in table.iter() {
        let value = match &mode {
            None => class.render("L"),
            Some(m) => specialized_text(&class.specialize(m)?),
        };
        classes.push(ClassEntry { k, value });
    }
    Ok(Report::Hilb(HilbReport {
        input,
        max_k,
        specialize: specialize.unwrap_or("none").to_string(),
        threshold: table.threshold(),
        classes,
    }))
}

fn cmd_qseries(
    curve: &Option<String>,
    resolution: &Option<PathBuf>,
    order: u32,
    leading: LeadingTermArg,
) -> Result<Report, Failure> {
    let (res, input) = load_input(curve, resolution)?;
    let q = q_series_closed(&res, leading.core())?;
    let series = q.expand(order)?;
    let expansion = (2..=order)
        .map(|k| ClassEntry {
            k: k as u64,
            value: series.coeff(k).render("L"),
        })
        .collect();
    Ok(Report::Qseries(QseriesReport {
        input,
        leading_term: leading.name().to_string(),
        closed_form: q.render(),
        order,
        expansion,
    }))
}

fn budget_from_env() -> Result<Option<u128>, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be an integer, found `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn cmd_verify(
    curve: &str,
    primes: &[u64],
    max_k: u64,
    jobs: usize,
    budget: Option<u128>,
    resolution: &Option<PathBuf>,
) -> Result<Report, Failure> {
    if max_k < 2 {
        return Err(Failure::Usage("--max-k must be at least 2".into()));
    }
    if primes.is_empty() {
        return Err(Failure::Usage("--primes needs at least one prime".into()));
    }
    let parsed = parse_curve(curve)?;
    let res = match resolution {
        Some(path) => parse_resolution_file(&read_file(path)?)?,
        None => resolve(&parsed)?,
    };
    let table = hilb_recursion(&res, max_k)?;
    let budget = match budget {
        Some(b) => b,
        None => budget_from_env()?.unwrap_or(DEFAULT_JET_BUDGET),
    };
    let reports = chilbert::jets::verify(&parsed, &table, primes, max_k, jobs, budget)?;
    let rows: Vec<JetRow> = reports
        .iter()
        .map(|r| JetRow {
            prime: r.prime,
            k: r.k,
            raw_count: r.raw_count.to_string(),
            predicted: r.predicted.to_string(),
            matches: r.matches,
        })
        .collect();
    let all_match = rows.iter().all(|r| r.matches);
    // If the mismatches are confined to some of the primes, the likely
    // culprit is the reduction mod those primes, not the predictions.
    if !all_match {
        let bad: Vec<u64> = primes
            .iter()
            .copied()
            .filter(|p| rows.iter().any(|r| r.prime == *p && !r.matches))
            .collect();
        if bad.len() < primes.len() {
            let list: Vec<String> = bad.iter().map(|p| p.to_string()).collect();
            eprintln!(
                "warning: mismatches occur only modulo {}; the curve may reduce \
                 badly there — try other primes",
                list.join(", ")
            );
        }
    }
    Ok(Report::Verify(VerifyReport {
        curve: parsed.render(),
        primes: primes.to_vec(),
        max_k,
        jobs,
        budget: budget.to_string(),
        reports: rows,
        all_match,
    }))
}

fn option_text(v: &Option<u64>) -> String {
    match v {
        Some(n) => n.to_string(),
        None => "none".into(),
    }
}

fn print_text(report: &Report) {
    match report {
        Report::Resolve(r) => {
            // The body below the comments is valid resolution-file syntax,
            // so this output can be fed back through --resolution.
            println!("# curve: {}", r.curve);
            println!("# smooth branch: {}", if r.smooth_branch { "yes" } else { "no" });
            println!("# threshold: {}", option_text(&r.threshold));
            for b in &r.blowups {
                let center = if b.centers.is_empty() {
                    "the origin".to_string()
                } else {
                    let names: Vec<String> =
                        b.centers.iter().map(|c| format!("E{c}")).collect();
                    format!("a point of {}", names.join(" and "))
                };
                println!(
                    "# blowup {}: at {center}, multiplicity {}",
                    b.id, b.multiplicity
                );
            }
            let edges: Vec<String> =
                r.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            println!("# edges: {}", edges.join(" "));
            println!("ambient_dim {}", r.ambient_dim);
            if let Some(m) = r.origin_mult {
                println!("origin_mult {m}");
            }
            for d in &r.divisors {
                let mut line = format!(
                    "divisor id={} N={} nu={} m={} strict={}",
                    d.id, d.n, d.nu, d.m, d.strict
                );
                if !d.neighbors.is_empty() {
                    let list: Vec<String> =
                        d.neighbors.iter().map(|n| n.to_string()).collect();
                    line.push_str(&format!(" neighbors={}", list.join(",")));
                }
                println!("{line}");
            }
        }
        Report::Zeta(r) => {
            println!("input: {}", r.input);
            println!("zeta: {}", r.zeta);
        }
        Report::Hilb(r) => {
            println!("input: {}", r.input);
            if r.specialize != "none" {
                println!("specialize: {}", r.specialize);
            }
            println!("threshold: {}", option_text(&r.threshold));
            for c in &r.classes {
                println!("H[{}] = {}", c.k, c.value);
            }
        }
        Report::Qseries(r) => {
            println!("input: {}", r.input);
            if r.leading_term != "standard" {
                println!("leading term: {}", r.leading_term);
            }
            println!("Q = {}", r.closed_form);
            for c in &r.expansion {
                println!("Q[{}] = {}", c.k, c.value);
            }
        }
        Report::Verify(r) => {
            println!("curve: {}", r.curve);
            let mut good = 0usize;
            for row in &r.reports {
                let status = if row.matches { "ok" } else { "MISMATCH" };
                println!(
                    "p={} k={}: count={} predicted={} {status}",
                    row.prime, row.k, row.raw_count, row.predicted
                );
                if row.matches {
                    good += 1;
                }
            }
            println!("{good} of {} checks match", r.reports.len());
        }
    }
}
