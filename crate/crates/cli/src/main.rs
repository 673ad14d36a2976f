//! Command-line front door: run any library operation on JSON files, emit a
//! structured report, and orchestrate the certified suites.
//!
//! Every invocation produces one report — `schema`, the argv it ran, sha-256
//! digests of the input files, an operation-specific payload, and a list of
//! certificates — rendered as JSON (default) or as a CSV of certificates.
//! All randomness flows from `--seed`, no timestamp enters the report, and
//! certificate order is canonical, so identical argv produce byte-identical
//! reports. Exit code 0 means every certificate passed, 1 means some check
//! failed on well-formed input, 2 means the invocation itself was unusable
//! (unknown flags, unreadable or malformed files).

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ambit_core::flows::{
    chain_flow, equivariant_maps, generate_semigroup, is_minimal, linear_orders_flow,
    minimal_left_ideals, orbits, verify_ideal_structure, FiniteAction, SelfMap,
};
use ambit_core::io::{
    BiKatetovFile, BohrFile, GeneratorsFile, GroupFile, KatetovFile, MetricFile, StaircaseFile,
    WindowSetFile,
};
use ambit_core::katetov::{
    adjoin, check_on_base, extension_property_score, kappa_extend, urysohn_approx, KatetovFunction,
    RequestPolicy,
};
use ambit_core::metric::{back_and_forth, random_metric, validate_metric, FiniteMetricSpace};
use ambit_core::report::{Certificate, Verdict};
use ambit_core::roelcke::{
    compose, staircase_compose, subset_from_idempotent, validate_bikatetov, BiKatetovMatrix,
    StaircaseRelation,
};
use ambit_core::suite::{run_suite, SUITE_NAMES};
use ambit_core::syndetic::{
    bohr_members, check_triple_sum_bohr, cyclic_group, is_syndetic, pestov_witness, BohrSpec,
    GroupTable, IntegerWindowSet,
};
use ambit_core::{Rat, Scalar};

#[derive(Parser)]
#[command(
    name = "ambit",
    version,
    about = "Exact finite models of metric amalgams and their dynamics"
)]
struct Cli {
    /// Primary input file.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Secondary input file.
    #[arg(long = "in2", global = true, value_name = "FILE")]
    input2: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Point count / subset bound / group order, per command.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Denominator bound for random rationals.
    #[arg(long, global = true)]
    denom: Option<i64>,
    /// Grid step, e.g. 1/4.
    #[arg(long, global = true)]
    delta: Option<String>,
    /// Grid cap, e.g. 1.
    #[arg(long, global = true)]
    cap: Option<String>,
    /// Largest request subset.
    #[arg(long = "max-subset", global = true)]
    max_subset: Option<usize>,
    /// Growth rounds.
    #[arg(long, global = true)]
    iters: Option<usize>,
    /// Integer window half-width.
    #[arg(long, global = true)]
    window: Option<i64>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Target flow for equivariant-map search.
    #[arg(long, global = true)]
    target: Option<String>,
    /// Soft time budget in seconds; exceeding it fails the run.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Top,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Top {
    /// Finite metric spaces: validation, random generation, isometry search.
    Metric {
        #[command(subcommand)]
        op: MetricOp,
    },
    /// Admissible distance profiles and canonical extensions.
    Katetov {
        #[command(subcommand)]
        op: KatetovOp,
    },
    /// Cross-distance matrices and their capped min-plus semigroup.
    Roelcke {
        #[command(subcommand)]
        op: RoelckeOp,
    },
    /// Transformation semigroups, ideals, and chain flows.
    Flows {
        #[command(subcommand)]
        op: FlowsOp,
    },
    /// Syndetic sets, Bohr membership, and group witnesses.
    Syndetic {
        #[command(subcommand)]
        op: SyndeticOp,
    },
    /// Run a certified check suite.
    Suite {
        /// One of: katetov, roelcke, flows, syndetic, all.
        name: String,
    },
}

#[derive(Subcommand)]
enum MetricOp {
    /// Check the metric axioms on a distance table.
    Validate,
    /// Generate a random rational metric space.
    Random,
    /// Search for an isometry from one space (--in) to another (--in2).
    Isometry,
}

#[derive(Subcommand)]
enum KatetovOp {
    /// Check a distance profile (--in2) for admissibility over its space (--in).
    Check,
    /// Canonically extend a profile (--in2) from its base to the whole space (--in).
    Extend,
    /// Realize a full-base profile (--in2) as an actual point of its space (--in).
    Adjoin,
    /// Run growth rounds that realize every small grid request.
    Urysohn,
    /// Score how completely a space realizes grid extension requests.
    Score,
}

#[derive(Subcommand)]
enum RoelckeOp {
    /// Check a cross-distance matrix for admissibility.
    Validate,
    /// Compose two matrices (--in, then --in2) by capped min-plus.
    Compose,
    /// Decode the generating subset of an idempotent matrix.
    Idempotent,
    /// Compose two staircase relations (--in, then --in2).
    Staircase,
}

#[derive(Subcommand)]
enum FlowsOp {
    /// Generate the closure of self-maps under composition.
    Semigroup,
    /// Find minimal left ideals and verify their structure.
    Ideals,
    /// Build the maximal-chain flow of a permutation action.
    Chains,
    /// Exhaustively search for equivariant maps to a target flow.
    Equivariant,
    /// Build the strict-total-orders flow.
    Orders,
}

#[derive(Subcommand)]
enum SyndeticOp {
    /// Gap structure of an integer window set.
    Gaps,
    /// Enumerate a rational Bohr set on a window.
    Bohr,
    /// Compare a Bohr set (--in2) against the triple sum set of a window set (--in).
    Triple,
    /// Syndetic witness against extreme amenability of a finite group.
    Pestov,
}

/// The uniform run record every invocation emits.
#[derive(Serialize)]
struct RunReport<'a> {
    schema: &'static str,
    command: String,
    inputs: &'a BTreeMap<String, String>,
    result: Value,
    certificates: &'a [Certificate],
    exit_code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut inputs = BTreeMap::new();
    match dispatch(&cli, &mut inputs) {
        Ok((result, certificates)) => {
            let mut exit = if certificates.iter().any(|c| c.verdict == Verdict::Fail) {
                1u8
            } else {
                0u8
            };
            let report = RunReport {
                schema: "1",
                command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
                inputs: &inputs,
                result,
                certificates: &certificates,
                exit_code: exit,
            };
            let rendered = match cli.format {
                Format::Json => {
                    let mut text =
                        serde_json::to_string_pretty(&report).expect("reports serialize");
                    text.push('\n');
                    text
                }
                Format::Csv => render_csv(&certificates),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            let failed = certificates
                .iter()
                .filter(|c| c.verdict == Verdict::Fail)
                .count();
            eprintln!(
                "{}: {} certificates, {} failing -> exit {}",
                report.command,
                certificates.len(),
                failed,
                exit
            );
            if let Some(budget) = cli.budget {
                let elapsed = started.elapsed().as_secs();
                if elapsed > budget {
                    eprintln!("budget of {budget}s exceeded ({elapsed}s elapsed)");
                    exit = exit.max(1);
                }
            }
            ExitCode::from(exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Routes to the handler. `Err` is a usage problem (exit 2); domain
/// violations on well-formed input come back as failing certificates.
fn dispatch(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
) -> Result<(Value, Vec<Certificate>), String> {
    match &cli.command {
        Top::Metric { op } => match op {
            MetricOp::Validate => metric_validate(cli, inputs),
            MetricOp::Random => metric_random(cli),
            MetricOp::Isometry => metric_isometry(cli, inputs),
        },
        Top::Katetov { op } => match op {
            KatetovOp::Check => katetov_check(cli, inputs, false),
            KatetovOp::Extend => katetov_check(cli, inputs, true),
            KatetovOp::Adjoin => katetov_adjoin(cli, inputs),
            KatetovOp::Urysohn => katetov_urysohn(cli, inputs),
            KatetovOp::Score => katetov_score(cli, inputs),
        },
        Top::Roelcke { op } => match op {
            RoelckeOp::Validate => roelcke_validate(cli, inputs),
            RoelckeOp::Compose => roelcke_compose(cli, inputs),
            RoelckeOp::Idempotent => roelcke_idempotent(cli, inputs),
            RoelckeOp::Staircase => roelcke_staircase(cli, inputs),
        },
        Top::Flows { op } => match op {
            FlowsOp::Semigroup => flows_semigroup(cli, inputs),
            FlowsOp::Ideals => flows_ideals(cli, inputs),
            FlowsOp::Chains => flows_chains(cli, inputs),
            FlowsOp::Equivariant => flows_equivariant(cli, inputs),
            FlowsOp::Orders => flows_orders(cli),
        },
        Top::Syndetic { op } => match op {
            SyndeticOp::Gaps => syndetic_gaps(cli, inputs),
            SyndeticOp::Bohr => syndetic_bohr(cli, inputs),
            SyndeticOp::Triple => syndetic_triple(cli, inputs),
            SyndeticOp::Pestov => syndetic_pestov(cli, inputs),
        },
        Top::Suite { name } => suite_command(cli, name),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing.
// ---------------------------------------------------------------------------

/// Reads a required input file and records its digest.
fn load(
    path: &Option<PathBuf>,
    flag: &str,
    inputs: &mut BTreeMap<String, String>,
) -> Result<String, String> {
    let path = path
        .as_ref()
        .ok_or_else(|| format!("--{flag} is required for this command"))?;
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    inputs.insert(
        path.display().to_string(),
        format!("sha256:{:x}", hasher.finalize()),
    );
    Ok(text)
}

/// Parses an optional rational flag, with a default.
fn rat_flag(value: &Option<String>, flag: &str, default: Rat) -> Result<Rat, String> {
    match value {
        None => Ok(default),
        Some(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("--{flag}: cannot parse {text:?} as a rational")),
    }
}

fn rat(num: i64, den: i64) -> Rat {
    Rat::from_int_ratio(num, den)
}

/// Loads and fully validates a metric space; a well-formed table that
/// violates the axioms comes back as a failing certificate.
fn load_space(
    path: &Option<PathBuf>,
    flag: &str,
    inputs: &mut BTreeMap<String, String>,
) -> Result<Result<FiniteMetricSpace<Rat>, Certificate>, String> {
    let text = load(path, flag, inputs)?;
    let file = MetricFile::parse(&text).map_err(|e| e.to_string())?;
    space_of(&file, flag)
}

/// Builds a space from a parsed table; shape mismatches are usage errors,
/// axiom violations are certificates.
fn space_of(
    file: &MetricFile,
    which: &str,
) -> Result<Result<FiniteMetricSpace<Rat>, Certificate>, String> {
    if file.n != file.d.len() {
        return Err(format!(
            "field n: declared {} but d has {} rows",
            file.n,
            file.d.len()
        ));
    }
    let rows: Vec<Vec<Rat>> = file.entries().map_err(|e| e.to_string())?;
    Ok(validate_metric(rows)
        .map_err(|v| Certificate::fail("metric-valid", format!("--{which}: {v}"))))
}

/// Renders the certificate table as CSV, one certificate per row.
fn render_csv(certificates: &[Certificate]) -> String {
    let field = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let verdict = |v: Verdict| match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Info => "info",
    };
    let mut out = String::from("property,verdict,witness\n");
    for c in certificates {
        out.push_str(&format!(
            "{},{},{}\n",
            field(&c.property),
            verdict(c.verdict),
            field(c.witness.as_deref().unwrap_or(""))
        ));
    }
    out
}

type Outcome = Result<(Value, Vec<Certificate>), String>;

// ---------------------------------------------------------------------------
// metric
// ---------------------------------------------------------------------------

fn metric_validate(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    match load_space(&cli.input, "in", inputs)? {
        Ok(space) => Ok((
            json!({ "n": space.n(), "diameter": space.diameter().to_string() }),
            vec![Certificate::pass(
                "metric-valid",
                format!("{} points, diameter {}", space.n(), space.diameter()),
            )],
        )),
        Err(cert) => Ok((Value::Null, vec![cert])),
    }
}

fn metric_random(cli: &Cli) -> Outcome {
    let n = cli.n.unwrap_or(4);
    let denom = cli.denom.unwrap_or(6);
    let cap = match &cli.cap {
        None => None,
        Some(_) => Some(rat_flag(&cli.cap, "cap", Rat::from_int(1))?),
    };
    let space: FiniteMetricSpace<Rat> =
        random_metric(n, denom, cap, cli.seed).map_err(|e| e.to_string())?;
    Ok((
        serde_json::to_value(MetricFile::from_space(&space)).expect("files serialize"),
        vec![Certificate::info(
            "metric-random",
            format!("{n} points, denominators up to {denom}, seed {}", cli.seed),
        )],
    ))
}

fn metric_isometry(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let a = match load_space(&cli.input, "in", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let b = match load_space(&cli.input2, "in2", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    match back_and_forth(&a, &b) {
        Some(map) => {
            let n = a.n();
            let exact = (0..n).all(|i| (0..n).all(|j| *a.dist(i, j) == *b.dist(map[i], map[j])));
            let cert = if exact {
                Certificate::pass("metric-isometry", format!("isometry found: {map:?}"))
            } else {
                Certificate::fail("metric-isometry", format!("returned map {map:?} distorts"))
            };
            Ok((json!({ "isometric": true, "map": map }), vec![cert]))
        }
        None => Ok((
            json!({ "isometric": false, "map": Value::Null }),
            vec![Certificate::info(
                "metric-isometry",
                "no isometry exists (exhaustive back-and-forth)",
            )],
        )),
    }
}

// ---------------------------------------------------------------------------
// katetov
// ---------------------------------------------------------------------------

/// Loads the profile file and its space; `extend` additionally lifts.
fn katetov_check(cli: &Cli, inputs: &mut BTreeMap<String, String>, extend: bool) -> Outcome {
    let space = match load_space(&cli.input, "in", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let text = load(&cli.input2, "in2", inputs)?;
    let file = KatetovFile::parse(&text).map_err(|e| e.to_string())?;
    let values: Vec<Rat> = file.values().map_err(|e| e.to_string())?;
    let f = match KatetovFunction::new(file.base.clone(), values) {
        Ok(f) => f,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("katetov-admissible", e.to_string())],
            ))
        }
    };
    if let Err(e) = check_on_base(&space, &f) {
        return Ok((
            json!({ "admissible": false }),
            vec![Certificate::fail("katetov-admissible", e.to_string())],
        ));
    }
    let mut certs = vec![Certificate::pass(
        "katetov-admissible",
        format!("profile on {} of {} points", f.base().len(), space.n()),
    )];
    if !extend {
        return Ok((json!({ "admissible": true }), certs));
    }
    let lift = kappa_extend(&space, &f).map_err(|e| e.to_string())?;
    let restricts = f
        .base()
        .iter()
        .zip(f.values())
        .all(|(&y, v)| lift.value_at(y) == Some(v));
    certs.push(if restricts && check_on_base(&space, &lift).is_ok() {
        Certificate::pass(
            "katetov-lift",
            format!("extended exactly to all {} points", space.n()),
        )
    } else {
        Certificate::fail("katetov-lift", "lift failed re-verification".to_string())
    });
    Ok((
        serde_json::to_value(KatetovFile::from_function(&lift)).expect("files serialize"),
        certs,
    ))
}

fn katetov_adjoin(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let space = match load_space(&cli.input, "in", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let text = load(&cli.input2, "in2", inputs)?;
    let file = KatetovFile::parse(&text).map_err(|e| e.to_string())?;
    let values: Vec<Rat> = file.values().map_err(|e| e.to_string())?;
    let f = match KatetovFunction::new(file.base.clone(), values) {
        Ok(f) => f,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("katetov-adjoin", e.to_string())],
            ))
        }
    };
    if let Err(e) = check_on_base(&space, &f) {
        return Ok((
            Value::Null,
            vec![Certificate::fail("katetov-adjoin", e.to_string())],
        ));
    }
    let step = match adjoin(&space, std::slice::from_ref(&f)) {
        Ok(step) => step,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("katetov-adjoin", e.to_string())],
            ))
        }
    };
    let n = space.n();
    let exact = (0..n).all(|i| {
        (0..n).all(|j| *step.after.dist(step.embedding[i], step.embedding[j]) == *space.dist(i, j))
    });
    let landed = step.adjoined[0].1;
    let cert = if exact {
        Certificate::pass(
            "katetov-adjoin",
            format!(
                "realized at index {landed}; all {} old distances preserved",
                n * (n - 1) / 2
            ),
        )
    } else {
        Certificate::fail(
            "katetov-adjoin",
            "embedding distorted a distance".to_string(),
        )
    };
    Ok((
        json!({
            "space": serde_json::to_value(MetricFile::from_space(&step.after)).expect("files serialize"),
            "realized_at": landed,
        }),
        vec![cert],
    ))
}

fn katetov_urysohn(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let space = match load_space(&cli.input, "in", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let iters = cli.iters.unwrap_or(1);
    let delta = rat_flag(&cli.delta, "delta", rat(1, 2))?;
    let cap = rat_flag(&cli.cap, "cap", Rat::from_int(1))?;
    let max_subset = cli.max_subset.unwrap_or(2);
    let policy = RequestPolicy::Full {
        delta,
        cap,
        max_subset,
    };
    let steps = match urysohn_approx(&space, iters, &policy) {
        Ok(steps) => steps,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("katetov-urysohn", e.to_string())],
            ))
        }
    };
    let mut embeddings_exact = true;
    let mut rounds = Vec::new();
    for step in &steps {
        let n = step.before.n();
        embeddings_exact &= (0..n).all(|i| {
            (0..n).all(|j| {
                *step.after.dist(step.embedding[i], step.embedding[j]) == *step.before.dist(i, j)
            })
        });
        rounds.push(json!({
            "before": n,
            "after": step.after.n(),
            "adjoined": step.adjoined.len(),
        }));
    }
    let last = steps.last().expect("at least one round");
    let certs = vec![
        if embeddings_exact {
            Certificate::pass(
                "katetov-urysohn-embeddings",
                format!("{} rounds, every stage embeds exactly", steps.len()),
            )
        } else {
            Certificate::fail(
                "katetov-urysohn-embeddings",
                "a stage embedding distorted a distance".to_string(),
            )
        },
        Certificate::info(
            "katetov-urysohn-growth",
            format!("{} points grew to {}", space.n(), last.after.n()),
        ),
    ];
    Ok((
        json!({
            "rounds": rounds,
            "space": serde_json::to_value(MetricFile::from_space(&last.after)).expect("files serialize"),
        }),
        certs,
    ))
}

fn katetov_score(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let space = match load_space(&cli.input, "in", inputs)? {
        Ok(space) => space,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let k = cli.n.unwrap_or(2);
    let delta = rat_flag(&cli.delta, "delta", rat(1, 2))?;
    let cap = rat_flag(&cli.cap, "cap", Rat::from_int(1))?;
    let report = extension_property_score(&space, k, &delta, &cap).map_err(|e| e.to_string())?;
    Ok((
        json!({
            "realized": report.realized,
            "total": report.total,
            "score": report.score.to_string(),
        }),
        vec![Certificate::info(
            "katetov-score",
            format!(
                "{} of {} grid requests realized (score {})",
                report.realized, report.total, report.score
            ),
        )],
    ))
}

// ---------------------------------------------------------------------------
// roelcke
// ---------------------------------------------------------------------------

/// Loads a cross-distance matrix file and validates it fully.
fn load_bikatetov(
    path: &Option<PathBuf>,
    flag: &str,
    inputs: &mut BTreeMap<String, String>,
) -> Result<Result<BiKatetovMatrix<Rat>, Certificate>, String> {
    let text = load(path, flag, inputs)?;
    let file = BiKatetovFile::parse(&text).map_err(|e| e.to_string())?;
    let left = match space_of(&file.left, flag)? {
        Ok(space) => space,
        Err(cert) => return Ok(Err(cert)),
    };
    let right = match space_of(&file.right, flag)? {
        Ok(space) => space,
        Err(cert) => return Ok(Err(cert)),
    };
    let entries: Vec<Vec<Rat>> = file.entries().map_err(|e| e.to_string())?;
    Ok(validate_bikatetov(&left, &right, entries)
        .map_err(|v| Certificate::fail("roelcke-valid", format!("--{flag}: {v}"))))
}

fn roelcke_validate(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    match load_bikatetov(&cli.input, "in", inputs)? {
        Ok(m) => Ok((
            json!({ "rows": m.left().n(), "columns": m.right().n() }),
            vec![Certificate::pass(
                "roelcke-valid",
                format!("{} x {} matrix is admissible", m.left().n(), m.right().n()),
            )],
        )),
        Err(cert) => Ok((Value::Null, vec![cert])),
    }
}

fn roelcke_compose(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let p = match load_bikatetov(&cli.input, "in", inputs)? {
        Ok(m) => m,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let q = match load_bikatetov(&cli.input2, "in2", inputs)? {
        Ok(m) => m,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let pq = match compose(&p, &q) {
        Ok(m) => m,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("roelcke-compose", e.to_string())],
            ))
        }
    };
    let admissible = validate_bikatetov(pq.left(), pq.right(), pq.rows()).is_ok();
    let cert = if admissible {
        Certificate::pass(
            "roelcke-compose",
            format!(
                "{} x {} composite is admissible",
                pq.left().n(),
                pq.right().n()
            ),
        )
    } else {
        Certificate::fail(
            "roelcke-compose",
            "composite failed re-validation".to_string(),
        )
    };
    Ok((
        serde_json::to_value(BiKatetovFile::from_matrix(&pq)).expect("files serialize"),
        vec![cert],
    ))
}

fn roelcke_idempotent(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let p = match load_bikatetov(&cli.input, "in", inputs)? {
        Ok(m) => m,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    match subset_from_idempotent(&p) {
        Ok(subset) => {
            let witness = if subset.is_empty() {
                "idempotent, but no subset generates it (empty zero diagonal)".to_string()
            } else {
                format!("squares to itself; generated by subset {subset:?}")
            };
            Ok((
                json!({ "subset": subset }),
                vec![Certificate::pass("roelcke-idempotent", witness)],
            ))
        }
        Err(e) => Ok((
            Value::Null,
            vec![Certificate::fail("roelcke-idempotent", e.to_string())],
        )),
    }
}

fn roelcke_staircase(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let parse = |path: &Option<PathBuf>, flag: &str, inputs: &mut BTreeMap<String, String>| {
        let text = load(path, flag, inputs)?;
        let file = StaircaseFile::parse(&text).map_err(|e| e.to_string())?;
        Ok::<_, String>(
            StaircaseRelation::new(file.n, &file.cells)
                .map_err(|v| Certificate::fail("roelcke-staircase", format!("--{flag}: {v}"))),
        )
    };
    let s = match parse(&cli.input, "in", inputs)? {
        Ok(s) => s,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let t = match parse(&cli.input2, "in2", inputs)? {
        Ok(t) => t,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    match staircase_compose(&s, &t) {
        Ok(st) => Ok((
            serde_json::to_value(StaircaseFile {
                n: st.n(),
                cells: st.cells().to_vec(),
            })
            .expect("files serialize"),
            vec![Certificate::pass(
                "roelcke-staircase",
                format!("composite staircase with {} cells", st.cells().len()),
            )],
        )),
        Err(e) => Ok((
            Value::Null,
            vec![Certificate::fail("roelcke-staircase", e.to_string())],
        )),
    }
}

// ---------------------------------------------------------------------------
// flows
// ---------------------------------------------------------------------------

/// Loads generator self-maps from a file; image range problems become
/// failing certificates.
fn load_generators(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    property: &str,
) -> Result<Result<(usize, Vec<SelfMap>), Certificate>, String> {
    let text = load(&cli.input, "in", inputs)?;
    let file = GeneratorsFile::parse(&text).map_err(|e| e.to_string())?;
    let mut maps = Vec::new();
    for images in &file.generators {
        match SelfMap::new(file.n, images.clone()) {
            Ok(map) => maps.push(map),
            Err(e) => return Ok(Err(Certificate::fail(property, e.to_string()))),
        }
    }
    Ok(Ok((file.n, maps)))
}

fn flows_semigroup(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let (_, maps) = match load_generators(cli, inputs, "flows-semigroup")? {
        Ok(loaded) => loaded,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    match generate_semigroup(&maps) {
        Ok(s) => Ok((
            json!({ "size": s.size(), "idempotents": s.idempotents() }),
            vec![Certificate::info(
                "flows-semigroup",
                format!(
                    "closure of {} generators has {} elements, {} idempotent",
                    maps.len(),
                    s.size(),
                    s.idempotents().len()
                ),
            )],
        )),
        Err(e) => Ok((
            Value::Null,
            vec![Certificate::fail("flows-semigroup", e.to_string())],
        )),
    }
}

fn flows_ideals(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let (_, maps) = match load_generators(cli, inputs, "flows-ideal-structure")? {
        Ok(loaded) => loaded,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let s = match generate_semigroup(&maps) {
        Ok(s) => s,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("flows-ideal-structure", e.to_string())],
            ))
        }
    };
    let ideals = minimal_left_ideals(&s);
    let mut all_good = true;
    let mut rows = Vec::new();
    for ideal in &ideals {
        let report = verify_ideal_structure(&s, ideal).map_err(|e| e.to_string())?;
        all_good &= report.minimal && report.all_pass();
        rows.push(json!({
            "ideal": ideal,
            "minimal": report.minimal,
            "right_identity": report.right_identity,
            "translations_bijective": report.pass_b,
            "equivariant_maps_are_translations": report.pass_c,
            "cross_ideal_isomorphic": report.pass_d,
        }));
    }
    let cert = if all_good {
        Certificate::pass(
            "flows-ideal-structure",
            format!(
                "{} minimal left ideals in a semigroup of {}; all structure checks hold",
                ideals.len(),
                s.size()
            ),
        )
    } else {
        Certificate::fail(
            "flows-ideal-structure",
            "a structure check failed; see the per-ideal rows".to_string(),
        )
    };
    Ok((json!({ "size": s.size(), "ideals": rows }), vec![cert]))
}

/// Loads generators as a permutation action.
fn load_action(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    property: &str,
) -> Result<Result<FiniteAction, Certificate>, String> {
    let (n, maps) = match load_generators(cli, inputs, property)? {
        Ok(loaded) => loaded,
        Err(cert) => return Ok(Err(cert)),
    };
    Ok(FiniteAction::new(n, maps).map_err(|e| Certificate::fail(property, e.to_string())))
}

fn flows_chains(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let action = match load_action(cli, inputs, "flows-chains")? {
        Ok(action) => action,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let (chains, chain_action) = chain_flow(&action).map_err(|e| e.to_string())?;
    let orbit_count = orbits(&chain_action).len();
    Ok((
        json!({
            "chains": chains.len(),
            "chain_orbits": orbit_count,
            "minimal": is_minimal(&chain_action),
        }),
        vec![Certificate::info(
            "flows-chains",
            format!(
                "{} maximal chains in {} orbit(s)",
                chains.len(),
                orbit_count
            ),
        )],
    ))
}

fn flows_equivariant(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let action = match load_action(cli, inputs, "flows-equivariant")? {
        Ok(action) => action,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let target = cli.target.as_deref().unwrap_or("chains");
    let b = match target {
        "chains" => chain_flow(&action).map_err(|e| e.to_string())?.1,
        "self" => action.clone(),
        other => {
            return Err(format!(
                "--target: unknown flow {other:?}; expected \"chains\" or \"self\""
            ))
        }
    };
    match equivariant_maps(&action, &b) {
        Ok(maps) => Ok((
            json!({ "maps": maps, "exhaustive": true }),
            vec![Certificate::pass(
                "flows-equivariant",
                format!("exhaustive: true; {} map(s) found", maps.len()),
            )],
        )),
        Err(e) => Ok((
            Value::Null,
            vec![Certificate::fail("flows-equivariant", e.to_string())],
        )),
    }
}

fn flows_orders(cli: &Cli) -> Outcome {
    let n = cli.n.unwrap_or(3);
    let report = linear_orders_flow(n).map_err(|e| e.to_string())?;
    let expected: u64 = (1..=n as u64).product();
    let ok = report.minimal
        && report.invariant
        && report.transitive
        && report.orders.len() as u64 == expected;
    let cert = if ok {
        let mut witness = format!(
            "{} orders on {} points: invariant, one orbit, minimal",
            report.orders.len(),
            n
        );
        if let Some(count) = report.full_space_orbits {
            witness.push_str(&format!("; {count} orbits on the full relation space"));
        }
        Certificate::pass("flows-linear-orders", witness)
    } else {
        Certificate::fail(
            "flows-linear-orders",
            format!(
                "{} orders (expected {expected}), minimal: {}",
                report.orders.len(),
                report.minimal
            ),
        )
    };
    Ok((
        json!({
            "n": n,
            "orders": report.orders.len(),
            "minimal": report.minimal,
            "full_space_orbits": report.full_space_orbits,
        }),
        vec![cert],
    ))
}

// ---------------------------------------------------------------------------
// syndetic
// ---------------------------------------------------------------------------

/// Loads an integer window set; members outside the window become a
/// failing certificate.
fn load_window_set(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    property: &str,
) -> Result<Result<IntegerWindowSet, Certificate>, String> {
    let text = load(&cli.input, "in", inputs)?;
    let file = WindowSetFile::parse(&text).map_err(|e| e.to_string())?;
    Ok(IntegerWindowSet::new(file.window, file.members)
        .map_err(|e| Certificate::fail(property, e.to_string())))
}

fn syndetic_gaps(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let set = match load_window_set(cli, inputs, "syndetic-gaps")? {
        Ok(set) => set,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let report = is_syndetic(&set);
    Ok((
        json!({
            "max_gap": report.max_gap,
            "syndetic": report.syndetic,
            "growing_gaps": report.growing_gaps,
        }),
        vec![Certificate::info(
            "syndetic-gaps",
            match report.max_gap {
                Some(g) => format!(
                    "max gap {g} on window ±{}{}",
                    set.window(),
                    if report.growing_gaps {
                        "; gaps strictly increase"
                    } else {
                        ""
                    }
                ),
                None => "fewer than two members".to_string(),
            },
        )],
    ))
}

fn syndetic_bohr(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let text = load(&cli.input, "in", inputs)?;
    let file = BohrFile::parse(&text).map_err(|e| e.to_string())?;
    let thetas: Vec<Rat> = file.thetas().map_err(|e| e.to_string())?;
    let eps: Rat = file.eps().map_err(|e| e.to_string())?;
    let window = cli.window.unwrap_or(100);
    let spec = match BohrSpec::new(thetas, eps) {
        Ok(spec) => spec,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("syndetic-bohr", e.to_string())],
            ))
        }
    };
    let members = match bohr_members(&spec, window) {
        Ok(set) => set,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("syndetic-bohr", e.to_string())],
            ))
        }
    };
    let gap = is_syndetic(&members);
    Ok((
        json!({ "window": window, "members": members.members() }),
        vec![Certificate::info(
            "syndetic-bohr",
            format!(
                "{} members on window ±{window}; max gap {:?}",
                members.members().len(),
                gap.max_gap
            ),
        )],
    ))
}

fn syndetic_triple(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let set = match load_window_set(cli, inputs, "syndetic-triple-bohr")? {
        Ok(set) => set,
        Err(cert) => return Ok((Value::Null, vec![cert])),
    };
    let text = load(&cli.input2, "in2", inputs)?;
    let file = BohrFile::parse(&text).map_err(|e| e.to_string())?;
    let thetas: Vec<Rat> = file.thetas().map_err(|e| e.to_string())?;
    let eps: Rat = file.eps().map_err(|e| e.to_string())?;
    let spec = match BohrSpec::new(thetas, eps) {
        Ok(spec) => spec,
        Err(e) => {
            return Ok((
                Value::Null,
                vec![Certificate::fail("syndetic-triple-bohr", e.to_string())],
            ))
        }
    };
    let report = check_triple_sum_bohr(&set, &spec).map_err(|e| e.to_string())?;
    let certs = vec![
        if report.holds {
            Certificate::pass(
                "syndetic-triple-bohr",
                format!(
                    "all {} Bohr members on ±{} lie in the triple sum set",
                    report.bohr_on_triple_margin.len(),
                    report.triple_bound
                ),
            )
        } else {
            Certificate::fail(
                "syndetic-triple-bohr",
                format!(
                    "{} Bohr member(s) escape the triple sum set, first {}",
                    report.triple_violations.len(),
                    report.triple_violations[0]
                ),
            )
        },
        Certificate::info(
            "syndetic-difference-report",
            format!(
                "{} Bohr member(s) on ±{} lie outside the bare difference set",
                report.difference_violations.len(),
                report.difference_bound
            ),
        ),
    ];
    Ok((
        json!({
            "max_gap": report.gap.max_gap,
            "triple_bound": report.triple_bound,
            "difference_bound": report.difference_bound,
            "bohr_on_triple_margin": report.bohr_on_triple_margin,
            "triple_violations": report.triple_violations,
            "difference_violations": report.difference_violations,
            "holds": report.holds,
        }),
        certs,
    ))
}

fn syndetic_pestov(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Outcome {
    let group = if cli.input.is_some() {
        let text = load(&cli.input, "in", inputs)?;
        let file = GroupFile::parse(&text).map_err(|e| e.to_string())?;
        match GroupTable::new(file.table) {
            Ok(group) => group,
            Err(e) => {
                return Ok((
                    Value::Null,
                    vec![Certificate::fail("syndetic-pestov", e.to_string())],
                ))
            }
        }
    } else {
        let n = cli
            .n
            .ok_or("--in (a group table) or --n (a cyclic order) is required")?;
        if n == 0 {
            return Err("--n: group order must be positive".to_string());
        }
        cyclic_group(n)
    };
    let report = pestov_witness(&group);
    let witness_json = report.witness.as_ref().map(|w| {
        json!({
            "s": w.s,
            "f": w.f,
            "product_set": w.product_set,
        })
    });
    let census_json = report.census.as_ref().map(|c| {
        json!({
            "nonempty_subsets": c.nonempty_subsets,
            "proper_product_sets": c.proper_product_sets,
        })
    });
    let cert = if report.extremely_amenable {
        Certificate::info(
            "syndetic-pestov",
            "trivial group: every syndetic product set is everything".to_string(),
        )
    } else {
        match &report.witness {
            Some(w) if w.fs_covers && w.ss_inverse_proper => Certificate::pass(
                "syndetic-pestov",
                format!(
                    "order {}: S = {:?} is syndetic (F of size {}) yet S S⁻¹ has {} of {} elements",
                    report.order,
                    w.s,
                    w.f.len(),
                    w.product_set.len(),
                    report.order
                ),
            ),
            _ => Certificate::fail(
                "syndetic-pestov",
                "witness failed re-verification".to_string(),
            ),
        }
    };
    Ok((
        json!({
            "order": report.order,
            "extremely_amenable": report.extremely_amenable,
            "witness": witness_json,
            "census": census_json,
        }),
        vec![cert],
    ))
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn suite_command(cli: &Cli, name: &str) -> Outcome {
    let report = run_suite(name, cli.seed).ok_or_else(|| {
        format!(
            "unknown suite {name:?}; expected one of {}",
            SUITE_NAMES.join(", ")
        )
    })?;
    Ok((
        json!({
            "name": report.name,
            "seed": report.seed,
            "passed": report.passed,
            "failed": report.failed,
        }),
        report.certificates,
    ))
}
