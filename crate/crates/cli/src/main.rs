//! `lexpow`: command-line front end for `lexpow-core`.
//!
//! Every run is a pure function of its arguments and input files; stdout and
//! report files are byte-identical across runs.
//!
//! Exit status: 0 success, 2 usage or parse error, 3 infeasible or
//! nonexistent object, 4 resource cap, 5 counterexample or table mismatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lexpow_core::betti::{
    ek_betti, is_stable, koszul_betti_capped, spp_betti, BettiTable, DEFAULT_LATTICE_CAP,
};
use lexpow_core::bounds::{
    lpp_bound_detailed, minimal_power_sequence, verify_main_theorem, widen_until_certified, Verdict,
};
use lexpow_core::degseq::DegreeSequence;
use lexpow_core::hilbert::{hilbert_function, HilbertFunction, Tail};
use lexpow_core::ideal::MonomialIdeal;
use lexpow_core::lexmac::{is_lex, lex_ideal_from_hf};
use lexpow_core::linkage::check_linkage;
use lexpow_core::lpp::{is_lpp, is_spp, is_xn_stable, lpp_degree_sequences, lpp_from_hf};
use lexpow_core::reproduce::{reproduce, Example};
use lexpow_core::suites::{
    combine, ek_oracle_suite, linkage_suite, main_theorem_suite, monotonicity_suite,
    spp_oracle_suite, MainChecks, SuiteReport,
};
use lexpow_core::text::{
    format_generators, format_ideal, ideal_from_json, ideal_to_json, parse_ideal,
};
use lexpow_core::Error;

/// Largest degree window tried when certifying a declared tail.
const WIDEN_LIMIT: u32 = 40;
/// Default cap on enumerated ideals and lcm-lattice sizes.
const DEFAULT_CAP: usize = DEFAULT_LATTICE_CAP;

#[derive(Parser, Debug)]
#[command(
    name = "lexpow",
    version,
    about = "Monomial ideals, lex-plus-powers bounds and Betti tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Degree bound D: list Hilbert functions through D, padding with the tail.
    #[arg(long, global = true)]
    max_degree: Option<u32>,

    /// Cap on enumerated ideals and lcm-lattice sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of S/I, or a Hilbert function padded through --max-degree.
    Hilbert {
        #[command(flatten)]
        source: Source,
    },
    /// Lex ideal with a given Hilbert function.
    Lex {
        #[command(flatten)]
        hf: HfArgs,
    },
    /// Lex-plus-powers ideal for a degree sequence.
    Lpp {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degrees: DegreeSequence,
    },
    /// Graded Betti table of an ideal, or the lex / lex-plus-powers bound for a Hilbert function.
    Betti {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long)]
        degrees: Option<DegreeSequence>,
        #[arg(long, value_enum, default_value_t = Format::Grid)]
        format: Format,
    },
    /// Ideal linked to I by the pure-power complete intersection of --degrees.
    Link {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        degrees: DegreeSequence,
    },
    /// Structural predicates of an ideal.
    Check {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        degrees: Option<DegreeSequence>,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Recompute the tables of a worked example and diff them against the recorded ones.
    Reproduce {
        /// `example-4.1`, `example-4.2` or `example-4.3`.
        example: String,
    },
}

#[derive(Args, Debug)]
struct HfArgs {
    /// Quotient Hilbert function `h_0,...,h_D`.
    #[arg(long)]
    hf: String,
    /// Number of variables.
    #[arg(long)]
    n: usize,
    /// `zero`, `const:<c>` or `open`.
    #[arg(long, default_value = "open")]
    tail: Tail,
}

/// Either an ideal file or a Hilbert function.
#[derive(Args, Debug)]
struct Source {
    /// Ideal file (`ring n=...` / `ideal: ...`, or JSON).
    #[arg(long, conflicts_with_all = ["hf", "n", "tail"])]
    ideal: Option<PathBuf>,
    #[arg(long, requires = "n")]
    hf: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "open")]
    tail: Tail,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Number of variables (largest ring for the Betti oracles).
    #[arg(long)]
    n: Option<usize>,
    /// Degree sequence; repeat for suites taking several.
    #[arg(long)]
    degrees: Vec<DegreeSequence>,
    /// Random trials per degree sequence; omitted means exhaustive where supported.
    #[arg(long)]
    trials: Option<u64>,
    /// Hilbert function for the monotonicity suite.
    #[arg(long)]
    hf: Option<String>,
    #[arg(long, default_value = "open")]
    tail: Tail,
    /// Write the full JSON report here.
    #[arg(long)]
    json_report: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Eliahou-Kervaire for stable ideals, the last-variable recursion when
    /// --degrees fits, Koszul homology otherwise.
    Auto,
    Ek,
    Koszul,
    Spp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Grid,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Linkage,
    BettiOracles,
    MainTheorem,
    Egh,
    Monotonicity,
}

/// A failed run: exit status, message for stderr, and any stdout produced
/// before the failure was detected.
#[derive(Debug)]
struct Failure {
    status: u8,
    message: String,
    output: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            status: 2,
            message: message.into(),
            output: String::new(),
        }
    }

    /// Counterexample or table mismatch; `output` is still printed.
    fn counterexample(output: String, message: impl Into<String>) -> Self {
        Failure {
            status: 5,
            message: message.into(),
            output,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Malformed(_) | Error::Mismatch(_) | Error::InfiniteDegree(_) => 2,
            Error::CapExceeded { .. } => 4,
            _ => 3,
        };
        Failure {
            status,
            message: e.to_string(),
            output: String::new(),
        }
    }
}

type Run = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure {
            status,
            message,
            output,
        }) => {
            print!("{output}");
            eprintln!("lexpow: {message}");
            ExitCode::from(status)
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Hilbert { source } => hilbert_cmd(cli, source),
        Command::Lex { hf } => {
            let h = build_hf(&hf.hf, hf.n, hf.tail, cli.max_degree)?;
            let lex = widen_until_certified(&h, WIDEN_LIMIT.max(h.bound()), lex_ideal_from_hf)?;
            Ok(ideal_output(cli, &lex))
        }
        Command::Lpp { source, degrees } => {
            let h = source_hf(cli, source, Some(degrees))?;
            check_ring(h.n(), degrees)?;
            let lpp =
                widen_until_certified(&h, WIDEN_LIMIT.max(h.bound()), |h| lpp_from_hf(h, degrees))?;
            Ok(ideal_output(cli, &lpp))
        }
        Command::Betti {
            source,
            method,
            degrees,
            format,
        } => betti_cmd(cli, source, *method, degrees.as_ref(), *format),
        Command::Link { ideal, degrees } => link_cmd(cli, ideal, degrees),
        Command::Check { ideal, degrees } => check_cmd(cli, ideal, degrees.as_ref()),
        Command::Verify(args) => verify_cmd(cli, args),
        Command::Reproduce { example } => reproduce_cmd(cli, example),
    }
}

fn read_ideal(path: &Path) -> std::result::Result<MonomialIdeal, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('{') {
        ideal_from_json(&text)
    } else {
        parse_ideal(&text)
    };
    parsed.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn build_hf(
    values: &str,
    n: usize,
    tail: Tail,
    max_degree: Option<u32>,
) -> std::result::Result<HilbertFunction, Failure> {
    let h = HilbertFunction::quotient(n, HilbertFunction::parse_values(values)?, tail)?;
    match max_degree {
        Some(d) if d > h.bound() => Ok(h.extended_to(d)?),
        Some(d) if d < h.bound() => Err(Failure::usage(format!(
            "--max-degree {d} is below the {} listed values",
            h.values().len()
        ))),
        _ => Ok(h),
    }
}

/// Default window for an ideal: through the socle degree plus one when
/// Artinian, else one past the largest generator degree.
fn default_window(ideal: &MonomialIdeal, d: Option<&DegreeSequence>) -> u32 {
    if let Some(s) = d.and_then(|d| d.socle_degree().ok()) {
        return s + 1;
    }
    if let Ok((e, _)) = minimal_power_sequence(ideal) {
        if let Ok(s) = e.socle_degree() {
            return s + 1;
        }
    }
    ideal.max_degree().unwrap_or(0) + 1
}

fn source_hf(
    cli: &Cli,
    source: &Source,
    d: Option<&DegreeSequence>,
) -> std::result::Result<HilbertFunction, Failure> {
    match (&source.ideal, &source.hf) {
        (Some(path), _) => {
            let ideal = read_ideal(path)?;
            let window = cli.max_degree.unwrap_or_else(|| default_window(&ideal, d));
            Ok(hilbert_function(&ideal, window))
        }
        (None, Some(values)) => {
            let n = source.n.ok_or_else(|| Failure::usage("--hf needs --n"))?;
            build_hf(values, n, source.tail, cli.max_degree)
        }
        (None, None) => Err(Failure::usage(
            "give --ideal <file> or --hf <values> --n <k>",
        )),
    }
}

fn check_ring(n: usize, d: &DegreeSequence) -> std::result::Result<(), Failure> {
    if d.n() != n {
        return Err(Failure::usage(format!(
            "degree sequence {d} does not fit a ring in {n} variables"
        )));
    }
    Ok(())
}

fn ideal_output(cli: &Cli, ideal: &MonomialIdeal) -> String {
    if cli.json {
        format!("{}\n", ideal_to_json(ideal))
    } else {
        format!("{}\n", format_generators(ideal))
    }
}

fn hilbert_cmd(cli: &Cli, source: &Source) -> Run {
    let h = source_hf(cli, source, None)?;
    if cli.json {
        let v = json!({ "n": h.n(), "values": h.values(), "tail": h.tail().to_string() });
        return Ok(format!("{v}\n"));
    }
    let values: Vec<String> = h.values().iter().map(u64::to_string).collect();
    Ok(format!(
        "n={} tail={}\nhf: {}\n",
        h.n(),
        h.tail(),
        values.join(",")
    ))
}

fn table_output(cli: &Cli, table: &BettiTable, format: Format, header: &str) -> String {
    if cli.json || format == Format::Json {
        format!("{}\n", table.to_json())
    } else {
        format!("{header}{}", table.format_grid())
    }
}

fn betti_cmd(
    cli: &Cli,
    source: &Source,
    method: Method,
    degrees: Option<&DegreeSequence>,
    format: Format,
) -> Run {
    let Some(path) = &source.ideal else {
        // Bound for a Hilbert function: lex without --degrees, LPP with.
        let h = source_hf(cli, source, degrees)?;
        if method != Method::Auto {
            return Err(Failure::usage("--method applies to --ideal input only"));
        }
        return match degrees {
            None => {
                let lex = widen_until_certified(&h, WIDEN_LIMIT.max(h.bound()), lex_ideal_from_hf)?;
                let table = ek_betti(&lex)?;
                Ok(table_output(
                    cli,
                    &table,
                    format,
                    &format!("lex {}\n", format_generators(&lex)),
                ))
            }
            Some(d) => {
                check_ring(h.n(), d)?;
                let b = widen_until_certified(&h, WIDEN_LIMIT.max(h.bound()), |h| {
                    lpp_bound_detailed(h, d)
                })?;
                let header = format!(
                    "lpp {d} {}\nmethod {}\n",
                    format_generators(&b.ideal),
                    method_name(&b.method)
                );
                Ok(table_output(cli, &b.table, format, &header))
            }
        };
    };
    let ideal = read_ideal(path)?;
    if let Some(d) = degrees {
        check_ring(ideal.n(), d)?;
    }
    let table = match method {
        Method::Ek => ek_betti(&ideal)?,
        Method::Koszul => koszul_betti_capped(&ideal, cli.cap)?,
        Method::Spp => {
            let d = match degrees {
                Some(d) => d.clone(),
                None => minimal_power_sequence(&ideal)?.0,
            };
            spp_betti(&ideal, &d)?
        }
        Method::Auto => match degrees {
            Some(d) if d.all_finite() && is_spp(&ideal, d) => spp_betti(&ideal, d)?,
            _ if is_stable(&ideal) => ek_betti(&ideal)?,
            _ => koszul_betti_capped(&ideal, cli.cap)?,
        },
    };
    Ok(table_output(cli, &table, format, ""))
}

fn method_name(m: &lexpow_core::bounds::BoundMethod) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn link_cmd(cli: &Cli, path: &Path, d: &DegreeSequence) -> Run {
    let ideal = read_ideal(path)?;
    check_ring(ideal.n(), d)?;
    let report = check_linkage(&ideal, d)?;
    if cli.json {
        let v = json!({
            "degrees": d.to_string(),
            "ideal": ideal_json_value(&ideal),
            "linked": ideal_json_value(&report.linked),
            "components": report.components.iter().map(|&(i, ok)| json!({ "i": i, "holds": ok })).collect::<Vec<_>>(),
            "spp": { "ideal": report.ideal_spp, "linked": report.linked_spp },
            "lpp": { "ideal": report.ideal_lpp, "linked": report.linked_lpp },
        });
        return Ok(format!("{v}\n"));
    }
    let mut out = format_ideal(&report.linked);
    let _ = writeln!(out, "# components hold: {}", report.components_hold());
    let _ = writeln!(out, "# spp: {} -> {}", report.ideal_spp, report.linked_spp);
    let _ = writeln!(out, "# lpp: {} -> {}", report.ideal_lpp, report.linked_lpp);
    if !report.passes() {
        return Err(Failure::counterexample(out, "linkage identities fail"));
    }
    Ok(out)
}

fn ideal_json_value(ideal: &MonomialIdeal) -> serde_json::Value {
    serde_json::from_str(&ideal_to_json(ideal)).expect("ideal JSON parses")
}

fn check_cmd(cli: &Cli, path: &Path, degrees: Option<&DegreeSequence>) -> Run {
    let ideal = read_ideal(path)?;
    let mut facts = serde_json::Map::new();
    facts.insert("stable".into(), is_stable(&ideal).into());
    facts.insert("lex".into(), is_lex(&ideal).into());
    facts.insert("artinian".into(), ideal.is_artinian().into());
    facts.insert("xn_stable".into(), is_xn_stable(&ideal).into());
    let mut violated = false;
    match degrees {
        None => {
            let max_entry = ideal.max_degree().unwrap_or(0) + 1;
            let seqs: Vec<String> = lpp_degree_sequences(&ideal, max_entry)
                .iter()
                .map(|d| d.to_string())
                .collect();
            facts.insert("lpp_for".into(), seqs.into());
        }
        Some(d) => {
            check_ring(ideal.n(), d)?;
            facts.insert("degrees".into(), d.to_string().into());
            facts.insert("spp".into(), is_spp(&ideal, d).into());
            facts.insert("lpp".into(), is_lpp(&ideal, d).into());
            if d.all_finite() && ideal.contains_ideal(&d.power_ideal()) {
                let bound = match verify_main_theorem(&ideal, d) {
                    Ok(r) => {
                        violated = !r.dominance.holds();
                        json!({
                            "lpp": generator_list(&r.lpp),
                            "verdict": verdict_name(r.dominance.verdict),
                            "growth_hypothesis": r.growth_hypothesis,
                            "witnesses": r.dominance.witnesses,
                        })
                    }
                    Err(Error::Infeasible { .. }) => json!("no lpp ideal"),
                    Err(e) => return Err(e.into()),
                };
                facts.insert("betti_vs_lpp".into(), bound);
            }
        }
    }
    let out = if cli.json {
        format!("{}\n", serde_json::Value::Object(facts))
    } else {
        let mut out = String::new();
        for (k, v) in &facts {
            let v = match v {
                serde_json::Value::Object(o) => o
                    .iter()
                    .map(|(k, v)| format!("{k}={}", plain(v)))
                    .collect::<Vec<_>>()
                    .join("; "),
                v => plain(v),
            };
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    };
    if violated {
        return Err(Failure::counterexample(
            out,
            "Betti table exceeds the lex-plus-powers bound",
        ));
    }
    Ok(out)
}

/// `x1^2, x2^2` (no `ideal:` prefix).
fn generator_list(ideal: &MonomialIdeal) -> String {
    format_generators(ideal)
        .trim_start_matches("ideal:")
        .trim()
        .to_string()
}

/// Strings unquoted, arrays of strings space-separated, anything else as JSON.
fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(a) if a.iter().all(|x| x.is_string()) => a
            .iter()
            .filter_map(|x| x.as_str())
            .collect::<Vec<_>>()
            .join(" "),
        v => v.to_string(),
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Dominated => "dominated",
        Verdict::Equal => "equal",
        Verdict::Incomparable => "incomparable",
    }
}

fn verify_cmd(cli: &Cli, args: &VerifyArgs) -> Run {
    let need_degrees = || {
        if args.degrees.is_empty() {
            Err(Failure::usage("this suite needs --degrees"))
        } else {
            Ok(())
        }
    };
    if let Some(n) = args.n {
        if args.suite != Suite::BettiOracles {
            for d in &args.degrees {
                check_ring(n, d)?;
            }
        }
    }
    let checks = |dominance, egh| MainChecks { dominance, egh };
    let report = match args.suite {
        Suite::Linkage => {
            need_degrees()?;
            linkage_suite(&args.degrees, args.trials.unwrap_or(100), cli.seed)?
        }
        Suite::BettiOracles => {
            let n = args.n.unwrap_or(3);
            let max_degree = cli.max_degree.unwrap_or(4);
            let trials = args.trials.unwrap_or(200);
            let mut reports = vec![ek_oracle_suite(n, max_degree, trials, cli.seed, cli.cap)?];
            if !args.degrees.is_empty() {
                let (exhaustive, random): (&[DegreeSequence], &[DegreeSequence]) = match args.trials
                {
                    None => (&args.degrees, &[]),
                    Some(_) => (&[], &args.degrees),
                };
                reports.push(spp_oracle_suite(
                    exhaustive, random, trials, cli.seed, cli.cap,
                )?);
            }
            combine("betti-oracles", reports)
        }
        Suite::MainTheorem | Suite::Egh => {
            need_degrees()?;
            let c = if args.suite == Suite::Egh {
                checks(false, true)
            } else {
                checks(true, false)
            };
            let reports = args
                .degrees
                .iter()
                .map(|d| main_theorem_suite(d, args.trials, cli.seed, cli.cap, c))
                .collect::<lexpow_core::Result<Vec<_>>>()?;
            let name = if args.suite == Suite::Egh {
                "egh"
            } else {
                "main-theorem"
            };
            combine(name, reports)
        }
        Suite::Monotonicity => {
            need_degrees()?;
            let values = args
                .hf
                .as_deref()
                .ok_or_else(|| Failure::usage("monotonicity needs --hf"))?;
            let n = args.n.unwrap_or_else(|| args.degrees[0].n());
            for d in &args.degrees {
                check_ring(n, d)?;
            }
            let h = build_hf(values, n, args.tail, cli.max_degree)?;
            monotonicity_suite(&h, &args.degrees, WIDEN_LIMIT.max(h.bound()))?
        }
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(path) = &args.json_report {
        std::fs::write(path, &json)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let out = if cli.json { json } else { summarize(&report) };
    if !report.passes() {
        let msg = format!("{} counterexample(s) found", report.counterexamples.len());
        return Err(Failure::counterexample(out, &msg));
    }
    Ok(out)
}

fn summarize(report: &SuiteReport) -> String {
    let mut out = format!("suite {}: {} instances\n", report.suite, report.instances);
    for (name, t) in &report.properties {
        let _ = writeln!(out, "  {name}: {}/{} passed", t.passed, t.checked);
    }
    for (reason, count) in &report.skipped {
        let _ = writeln!(out, "  skipped ({reason}): {count}");
    }
    for c in &report.counterexamples {
        let degrees = c.degrees.as_deref().unwrap_or("-");
        let _ = writeln!(
            out,
            "  COUNTEREXAMPLE {} d={degrees} {}",
            c.property, c.ideal
        );
    }
    out
}

fn reproduce_cmd(cli: &Cli, name: &str) -> Run {
    let full = if name.starts_with("example-") {
        name.to_string()
    } else {
        format!("example-{name}")
    };
    let example = Example::find(&full).map_err(|e| Failure::usage(e.to_string()))?;
    let reproductions = reproduce(example)?;
    let all_match = reproductions.iter().all(|r| r.matches());
    let out = if cli.json {
        let tables: Vec<_> = reproductions
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "computed": r.computed,
                    "matches": r.matches(),
                    "diff": r.diff().iter().map(|&(i, j, e, c)| json!({ "i": i, "j": j, "expected": e, "computed": c })).collect::<Vec<_>>(),
                    "errata": r.errata.iter().map(|e| json!({ "i": e.i, "j": e.j, "printed": e.printed, "value": e.value })).collect::<Vec<_>>(),
                })
            })
            .collect();
        format!("{}\n", json!({ "example": example.name, "tables": tables }))
    } else {
        let values: Vec<String> = example.values.iter().map(u64::to_string).collect();
        let mut out = format!(
            "{} n={} hf={} tail={}\n",
            example.name,
            example.n,
            values.join(","),
            example.tail
        );
        for r in &reproductions {
            let _ = write!(out, "\n{}\n{}", r.label, r.computed.format_grid());
            for e in r.errata {
                let _ = writeln!(
                    out,
                    "erratum: beta_{{{},{}}} recorded as {}, corrected to {}",
                    e.i, e.j, e.printed, e.value
                );
            }
            let diff = r.diff();
            if diff.is_empty() {
                out.push_str("diff: none\n");
            } else {
                for (i, j, e, c) in diff {
                    let _ = writeln!(out, "diff: beta_{{{i},{j}}} expected {e} computed {c}");
                }
            }
        }
        out
    };
    if !all_match {
        return Err(Failure::counterexample(
            out,
            "computed tables differ from the recorded ones",
        ));
    }
    Ok(out)
}
