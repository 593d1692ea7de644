//! `qramsey`: command-line driver for the finders, constructions, bound
//! tables and the exact engine.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 negative result (no
//! witness found, or a claim refuted), 4 degenerate parameters, 5 work budget
//! exhausted. Anything else is an I/O failure.

mod manifest;
mod table;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qramsey::certificate::{Versioned, WitnessRecord, EXACT_SCHEMA, LOWER_BOUND_SCHEMA};
use qramsey::constructions::{construct_chappell_gimbel, sample_gnp_half, sample_weighted, weighted_params};
use qramsey::exact::{self, ExactConfig, ThresholdFn};
use qramsey::finders::{self, HomogeneityWitness};
use qramsey::{decode_graph6, to_graph6_string, Error, Graph, Side};

use manifest::RunManifest;

#[derive(Parser, Serialize)]
#[command(name = "qramsey", version, about = "Quasi-Ramsey finders, constructions, bounds and exact values")]
struct Cli {
    /// Worker threads for parallel search (exact, thin, skew restarts).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Where to write the run manifest. Defaults to `<output>.manifest.json`
    /// when `--output` is given.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
enum Command {
    /// Search a graph for a homogeneous set and write a witness record.
    Find(FindArgs),
    /// Build a graph from one of the constructions and write it as graph6.
    Construct(ConstructArgs),
    /// Exhaustively check that a graph has no homogeneous set, or recheck a
    /// witness record.
    Verify(VerifyArgs),
    /// Compute an exact quasi-Ramsey number by enumeration.
    Exact(ExactArgs),
    /// Emit a table of closed-form bounds as CSV.
    Bounds(BoundsArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FindMode {
    Peel,
    Skew,
    Thin,
    Fixed,
    Variable,
}

#[derive(clap::Args, Serialize)]
struct FindArgs {
    #[arg(long, value_enum)]
    mode: FindMode,
    /// Graph6 file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = finders::DEFAULT_MAX_RESTARTS)]
    max_restarts: usize,
    #[arg(long, default_value_t = finders::DEFAULT_MAX_SAMPLES)]
    max_samples: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Family {
    ChappellGimbel,
    Gnp,
    Weighted,
}

#[derive(clap::Args, Serialize)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nu: Option<f64>,
    /// Force the block count of the weighted construction.
    #[arg(long)]
    z_override: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Block labels for the weighted family, one per line. Defaults to
    /// `<output>.blocks` when `--output` is given.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum ClaimKind {
    Fixed,
    Variable,
}

#[derive(clap::Args, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    claim: Option<ClaimKind>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Threshold function for variable claims: const:T, linear:A, sqrt:NU or
    /// weighted:NU.
    #[arg(long)]
    threshold: Option<String>,
    /// Graph6 file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Witness record to recheck instead of running an exhaustive check.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Maximum number of subsets to examine.
    #[arg(long, default_value_t = exact::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args, Serialize)]
struct ExactArgs {
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: usize,
    /// Threshold function for the variable number instead of `--t`.
    #[arg(long)]
    threshold: Option<String>,
    #[arg(long, default_value_t = exact::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = exact::DEFAULT_CEILING)]
    ceiling: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TableKind {
    Lambda,
    VariableLower,
    FixedLower,
    Brackets,
    Cg,
}

#[derive(clap::Args, Serialize)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    table: TableKind,
    /// `start:end:step`, or a single value.
    #[arg(long)]
    grid: String,
    /// Order parameter for the lower-bound, bracket and Chappell-Gimbel tables.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A problem with the command line rather than with the computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn require<T: Copy>(value: Option<T>, flag: &str, context: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| usage(format!("{context} requires --{flag}")))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::NoWitness(_) | Error::SamplesExhausted { .. }) => 3,
        Some(Error::DegenerateParameters(_) | Error::PreconditionFailed(_)) => 4,
        Some(Error::BudgetExceeded { .. } | Error::CeilingExceeded { .. }) => 5,
        Some(Error::Domain(_) | Error::InvalidVertex { .. } | Error::MalformedGraph6(_)) => 2,
        None => 1,
    }
}

/// Outcome of a command: what to write, and the exit code to report.
struct Outcome {
    body: Vec<u8>,
    code: u8,
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    seed: Option<u64>,
}

impl Outcome {
    fn json(value: &impl Serialize, code: u8) -> anyhow::Result<Self> {
        let mut body = serde_json::to_vec(value)?;
        body.push(b'\n');
        Ok(Outcome {
            body,
            code,
            inputs: Vec::new(),
            outputs: Vec::new(),
            seed: None,
        })
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let line = bytes
        .split(|&b| b == b'\n')
        .find(|l| !l.iter().all(u8::is_ascii_whitespace))
        .unwrap_or(&[]);
    Ok(decode_graph6(line)?)
}

fn write_target(path: Option<&Path>, body: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body)?;
            Ok(out.flush()?)
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn cmd_find(args: &FindArgs) -> anyhow::Result<Outcome> {
    let g = read_graph(&args.input)?;
    let (witness, mode, p): (HomogeneityWitness, &str, _) = match args.mode {
        FindMode::Peel => {
            let alpha = require(args.alpha, "alpha", "peel mode")?;
            let side = finders::denser_side(&g);
            let dense = match side {
                Side::Graph => g.clone(),
                Side::Complement => g.complement(),
            };
            let h = finders::greedy_peel(&dense, alpha)?;
            if h.is_empty() {
                return Err(Error::NoWitness(format!("peeling at alpha = {alpha} removed every vertex")).into());
            }
            let threshold = alpha * h.len() as f64;
            let w = HomogeneityWitness::certify(&g, h, side, threshold, None)?;
            (w, "peel", params(&[("alpha", json!(alpha))]))
        }
        FindMode::Skew => {
            let nu = require(args.nu, "nu", "skew mode")?;
            let (set, side) = finders::skew_stable_search(&g, nu, args.seed, args.max_restarts)?;
            let threshold = finders::eq1_degree_bound(set.len(), nu);
            let w = HomogeneityWitness::certify(&g, set, side, threshold, Some(args.seed))?;
            let p = params(&[("nu", json!(nu)), ("max_restarts", json!(args.max_restarts))]);
            (w, "skew", p)
        }
        FindMode::Thin => {
            let k = require(args.k, "k", "thin mode")?;
            let eps = require(args.eps, "eps", "thin mode")?;
            let out = finders::thin_sampled(&g, k, eps, args.seed, args.max_samples)?;
            let w = HomogeneityWitness::certify(&g, out.set, Side::Graph, out.threshold, Some(args.seed))?;
            let p = params(&[
                ("k", json!(k)),
                ("eps", json!(eps)),
                ("max_samples", json!(args.max_samples)),
                ("samples_used", json!(out.samples_used)),
            ]);
            (w, "thin", p)
        }
        FindMode::Fixed => {
            let k = require(args.k, "k", "fixed mode")?;
            let w = finders::fixed_pipeline_with(&g, k, args.seed, args.max_samples)?;
            (w, "fixed", params(&[("k", json!(k)), ("max_samples", json!(args.max_samples))]))
        }
        FindMode::Variable => {
            let k = require(args.k, "k", "variable mode")?;
            let nu = require(args.nu, "nu", "variable mode")?;
            let w = finders::variable_finder(&g, k, nu, args.seed, args.max_restarts)?;
            let p = params(&[("k", json!(k)), ("nu", json!(nu)), ("max_restarts", json!(args.max_restarts))]);
            (w, "variable", p)
        }
    };
    let record = WitnessRecord::new(&g, &witness, mode, p)?;
    let mut outcome = Outcome::json(&record, 0)?;
    outcome.inputs.push(args.input.clone());
    outcome.seed = witness.seed;
    Ok(outcome)
}

fn cmd_construct(args: &ConstructArgs) -> anyhow::Result<Outcome> {
    let mut labels = None;
    let g = match args.family {
        Family::ChappellGimbel => {
            let k = require(args.k, "k", "the chappell-gimbel family")?;
            let t = require(args.t, "t", "the chappell-gimbel family")?;
            construct_chappell_gimbel(k, t)?
        }
        Family::Gnp => {
            let n = require(args.n, "n", "the gnp family")?;
            sample_gnp_half(n, args.seed)
        }
        Family::Weighted => {
            let k = require(args.k, "k", "the weighted family")?;
            let nu = require(args.nu, "nu", "the weighted family")?;
            let p = weighted_params(k, nu, args.z_override)?;
            if !p.asymptotic {
                eprintln!(
                    "note: block count forced to {}; this instance carries no asymptotic guarantee",
                    p.z
                );
            }
            let (g, l) = sample_weighted(&p, args.seed);
            labels = Some(l);
            g
        }
    };
    let mut body = to_graph6_string(&g)?.into_bytes();
    body.push(b'\n');
    let mut outcome = Outcome {
        body,
        code: 0,
        inputs: Vec::new(),
        outputs: Vec::new(),
        seed: matches!(args.family, Family::Gnp | Family::Weighted).then_some(args.seed),
    };
    if let Some(labels) = labels {
        let path = args
            .labels
            .clone()
            .or_else(|| args.output.as_ref().map(|o| with_suffix(o, ".blocks")));
        if let Some(path) = path {
            let text: String = labels.iter().map(|b| format!("{b}\n")).collect();
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            outcome.outputs.push(path);
        }
    }
    Ok(outcome)
}

fn parse_threshold(s: &str) -> anyhow::Result<ThresholdFn> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Outcome> {
    if let Some(path) = &args.witness {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let record: WitnessRecord =
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: not a witness record: {e}", path.display())))?;
        let mut ok = record.recheck()?;
        let mut inputs = vec![path.clone()];
        if let Some(input) = &args.input {
            let g = read_graph(input)?;
            ok &= record.witness().verify(&g)?;
            inputs.push(input.clone());
        }
        let report = json!({
            "schema": "qramsey.witness-check/1",
            "witness": path.display().to_string(),
            "valid": ok,
        });
        let mut outcome = Outcome::json(&report, if ok { 0 } else { 3 })?;
        outcome.inputs = inputs;
        return Ok(outcome);
    }
    let claim = require(args.claim, "claim", "verify (without --witness)")?;
    let k = require(args.k, "k", "verify")?;
    let input = args.input.as_ref().ok_or_else(|| usage("verify requires --input"))?;
    let g = read_graph(input)?;
    let cert = match claim {
        ClaimKind::Fixed => {
            let t = require(args.t, "t", "a fixed claim")?;
            exact::verify_no_homogeneous_fixed(&g, k, t, args.budget)?
        }
        ClaimKind::Variable => {
            let f = args
                .threshold
                .as_deref()
                .ok_or_else(|| usage("a variable claim requires --threshold"))?;
            exact::verify_no_homogeneous_variable(&g, k, parse_threshold(f)?, args.budget)?
        }
    };
    let code = if cert.verified { 0 } else { 3 };
    let mut outcome = Outcome::json(&Versioned::new(LOWER_BOUND_SCHEMA, &cert), code)?;
    outcome.inputs.push(input.clone());
    Ok(outcome)
}

fn cmd_exact(args: &ExactArgs) -> anyhow::Result<Outcome> {
    let config = ExactConfig {
        budget: args.budget,
        ceiling: args.ceiling,
    };
    let result = match (args.t, &args.threshold) {
        (Some(t), None) => exact::exact_fixed(t, args.k, config),
        (None, Some(f)) => exact::exact_variable(parse_threshold(f)?, args.k, config),
        _ => return Err(usage("exact needs exactly one of --t and --threshold")),
    };
    match result {
        Ok(r) => Outcome::json(&Versioned::new(EXACT_SCHEMA, &r), 0),
        Err(Error::BudgetExceeded {
            spent,
            lower_bound,
            reason,
        }) => {
            eprintln!("budget exceeded ({reason}); value lies in [{lower_bound}, inf)");
            let report = json!({
                "schema": EXACT_SCHEMA,
                "status": "budget-exceeded",
                "lower_bound": lower_bound,
                "upper_bound": null,
                "subsets_examined": spent,
                "reason": reason,
            });
            Outcome::json(&report, 5)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_bounds(args: &BoundsArgs) -> anyhow::Result<Outcome> {
    let grid = table::parse_grid(&args.grid).map_err(usage)?;
    let body = table::render(args.table, &grid, args.k)?;
    Ok(Outcome {
        body,
        code: 0,
        inputs: Vec::new(),
        outputs: Vec::new(),
        seed: None,
    })
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn output_of(command: &Command) -> Option<&Path> {
    match command {
        Command::Find(a) => a.output.as_deref(),
        Command::Construct(a) => a.output.as_deref(),
        Command::Verify(a) => a.output.as_deref(),
        Command::Exact(a) => a.output.as_deref(),
        Command::Bounds(a) => a.output.as_deref(),
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let started = Instant::now();
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
        .map_err(|e| anyhow!("thread pool: {e}"))?;
    let mut outcome = match &cli.command {
        Command::Find(a) => cmd_find(a)?,
        Command::Construct(a) => cmd_construct(a)?,
        Command::Verify(a) => cmd_verify(a)?,
        Command::Exact(a) => cmd_exact(a)?,
        Command::Bounds(a) => cmd_bounds(a)?,
    };
    let output = output_of(&cli.command);
    write_target(output, &outcome.body)?;
    if let Some(o) = output {
        outcome.outputs.insert(0, o.to_path_buf());
    }
    let manifest_path = cli
        .manifest
        .clone()
        .or_else(|| output.map(|o| with_suffix(o, ".manifest.json")));
    if let Some(path) = manifest_path {
        let m = RunManifest::build(cli, outcome.seed, &outcome.inputs, &outcome.outputs, started.elapsed())?;
        let mut text = serde_json::to_vec_pretty(&m)?;
        text.push(b'\n');
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(outcome.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
