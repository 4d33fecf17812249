//! Command-line front end: parse matroid files and constructor strings,
//! dispatch computations, emit JSON or text, run the scan and the
//! relaxation verifier.
//!
//! Exit status: 0 on success, 1 on input or validation errors, 2 when a
//! verification or scan finds failures (the tool worked; the claim did
//! not).

use std::io::{IsTerminal, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use matroid_kl::analysis::{
    scan_sparse_paving, verify_relaxation, CheckSet, RelaxationReport, ScanConfig,
};
use matroid_kl::closed_form;
use matroid_kl::io::{
    bipoly_to_json, matroid_from_constructor, matroid_from_json, matroid_to_json, poly_to_json,
    MatroidInput,
};
use matroid_kl::kl::{kl_triple, KlTriple};
use matroid_kl::tutte::{tutte_polynomial, MAX_TUTTE_GROUND_SET};
use matroid_kl::{FlatLattice, Subset};

#[derive(Parser)]
#[command(
    name = "matroid-kl",
    about = "Exact Kazhdan-Lusztig, inverse Kazhdan-Lusztig and Z-polynomials of matroids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Constructor string: uniform:k,n | boolean:n | wheel:k | whirl:k |
    /// minimal:k,n | graph:v;a-b,c-d,...
    constructor: Option<String>,
    /// Read the matroid from a JSON file instead ("-" for stdin).
    #[arg(long, conflicts_with = "constructor")]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute P, Q and/or Z of a matroid.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated subset of P,Q,Z (default all).
        #[arg(long, default_value = "P,Q,Z")]
        which: String,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Relax a circuit-hyperplane and print the relaxed matroid.
    Relax {
        #[command(flatten)]
        input: InputArgs,
        /// The circuit-hyperplane, as comma-separated elements.
        #[arg(long, value_name = "i,j,...", conflicts_with = "all")]
        hyperplane: Option<String>,
        /// Relax every circuit-hyperplane in turn.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Remove a free basis, inverting a relaxation.
    Unrelax {
        #[command(flatten)]
        input: InputArgs,
        /// The free basis, as comma-separated elements.
        #[arg(long, value_name = "i,j,...", conflicts_with = "all")]
        basis: Option<String>,
        /// Unrelax every free basis in turn.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Print the relaxation deltas p_k, q_k, z_k.
    Delta {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Closed-form triple of the uniform matroid U_{k,n}.
    Uniform {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Closed-form triple of any sparse paving matroid with parameters
    /// (n, k, lambda).
    Sparse {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Scan the sparse paving parameter space: real-rootedness of P and Z,
    /// log-concavity of Q, non-negativity of all three, for every
    /// (n, k, lambda) with lambda up to the coarse bound.
    Scan {
        /// Largest ground set size (up to 30).
        #[arg(long, default_value_t = 25)]
        max_n: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Comma-separated subset of real-rooted,log-concave,nonneg.
        #[arg(long, default_value = "real-rooted,log-concave,nonneg")]
        checks: String,
        /// Keep only failing entries in memory and output.
        #[arg(long)]
        failures_only: bool,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Verify the relaxation identities (flats, Tutte, characteristic,
    /// P/Q/Z deltas) on a concrete circuit-hyperplane.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "i,j,...", conflicts_with = "all")]
        hyperplane: Option<String>,
        /// Verify every circuit-hyperplane.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Structural summary of a matroid.
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        format: Option<Format>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn effective_format(requested: Option<Format>) -> Format {
    requested.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Text
        } else {
            Format::Json
        }
    })
}

fn load_input(args: &InputArgs) -> Result<MatroidInput, AnyError> {
    match (&args.constructor, &args.input) {
        (Some(c), None) => Ok(matroid_from_constructor(c)?),
        (None, Some(path)) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(path)?
            };
            Ok(matroid_from_json(&text)?)
        }
        _ => Err("exactly one input (a constructor string or --input FILE) is required".into()),
    }
}

fn parse_subset(text: &str) -> Result<Subset, AnyError> {
    let mut elems = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        elems.push(
            part.parse::<usize>()
                .map_err(|e| format!("bad element {part:?}: {e}"))?,
        );
    }
    Ok(Subset::from_elements(elems))
}

fn triple_json(t: &KlTriple, which: &[char]) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    for w in which {
        match w {
            'P' => obj.insert("P".into(), poly_to_json(&t.p)),
            'Q' => obj.insert("Q".into(), poly_to_json(&t.q)),
            'Z' => obj.insert("Z".into(), poly_to_json(&t.z)),
            _ => unreachable!(),
        };
    }
    serde_json::Value::Object(obj)
}

fn print_triple_text(t: &KlTriple, which: &[char]) {
    for w in which {
        match w {
            'P' => println!("P = {}", t.p),
            'Q' => println!("Q = {}", t.q),
            'Z' => println!("Z = {}", t.z),
            _ => unreachable!(),
        }
    }
}

fn parse_which(which: &str) -> Result<Vec<char>, AnyError> {
    let mut out = Vec::new();
    for part in which.split(',') {
        match part.trim().to_ascii_uppercase().as_str() {
            "P" => out.push('P'),
            "Q" => out.push('Q'),
            "Z" => out.push('Z'),
            "" => {}
            other => return Err(format!("unknown polynomial {other:?} (expected P, Q, Z)").into()),
        }
    }
    if out.is_empty() {
        return Err("--which selected nothing".into());
    }
    Ok(out)
}

/// `uniform:k,n` / `boolean:n` constructor strings carry their parameters
/// outright; `compute` answers them from the closed forms without ever
/// materializing the basis list.
fn uniform_constructor_params(s: &str) -> Option<(usize, usize)> {
    let (head, rest) = s.split_once(':')?;
    match head {
        "uniform" => {
            let (k, n) = rest.split_once(',')?;
            Some((k.trim().parse().ok()?, n.trim().parse().ok()?))
        }
        "boolean" => {
            let n = rest.trim().parse().ok()?;
            Some((n, n))
        }
        _ => None,
    }
}

/// Triple of an input without forcing base enumeration when a closed form
/// applies: sparse paving specs and explicitly uniform matroids go through
/// the (n, k, lambda) formulas; everything else runs the lattice engine.
fn triple_of_input(input: &MatroidInput) -> Result<KlTriple, AnyError> {
    match input {
        MatroidInput::Sparse(spec) => {
            let lambda = spec.lambda() as u64;
            if closed_form::lambda_exceeds_bound(spec.n, spec.k, lambda)? {
                eprintln!(
                    "warning: lambda = {lambda} exceeds the bound {} for (n, k) = ({}, {})",
                    closed_form::lambda_bound(spec.n, spec.k)?,
                    spec.n,
                    spec.k
                );
            }
            Ok(closed_form::sparse_paving_triple(spec.n, spec.k, lambda)?)
        }
        MatroidInput::Explicit(m) => match m.as_uniform() {
            Some((k, n)) => Ok(closed_form::uniform_triple(k, n)?),
            None => Ok(kl_triple(m)?),
        },
    }
}

fn run(command: Command) -> Result<ExitCode, AnyError> {
    match command {
        Command::Compute {
            input,
            which,
            format,
        } => {
            let which = parse_which(&which)?;
            let t = match input
                .constructor
                .as_deref()
                .and_then(uniform_constructor_params)
            {
                Some((k, n)) => closed_form::uniform_triple(k, n)?,
                None => triple_of_input(&load_input(&input)?)?,
            };
            match effective_format(format) {
                Format::Json => println!("{}", triple_json(&t, &which)),
                Format::Text => print_triple_text(&t, &which),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Relax {
            input,
            hyperplane,
            all,
            format,
        } => {
            let m = load_input(&input)?.into_matroid()?;
            let hyperplanes = targets(hyperplane, all, || m.circuit_hyperplanes(), "--hyperplane")?;
            let mut results = Vec::new();
            for h in hyperplanes {
                results.push((h, m.relax(h)?));
            }
            match effective_format(format) {
                Format::Json => {
                    let items: Vec<_> = results
                        .iter()
                        .map(|(h, r)| {
                            json!({"hyperplane": h.elements(), "matroid": matroid_to_json(r)})
                        })
                        .collect();
                    match (all, items.len()) {
                        (false, 1) => println!("{}", items[0]["matroid"]),
                        _ => println!("{}", serde_json::Value::Array(items)),
                    }
                }
                Format::Text => {
                    for (h, r) in &results {
                        println!(
                            "relaxed {h}: rank {}, {} bases on {} elements",
                            r.rank(),
                            r.bases().len(),
                            r.size()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Unrelax {
            input,
            basis,
            all,
            format,
        } => {
            let m = load_input(&input)?.into_matroid()?;
            let bases = targets(basis, all, || m.free_bases(), "--basis")?;
            let mut results = Vec::new();
            for b in bases {
                results.push((b, m.unrelax(b)?));
            }
            match effective_format(format) {
                Format::Json => {
                    let items: Vec<_> = results
                        .iter()
                        .map(|(b, r)| json!({"basis": b.elements(), "matroid": matroid_to_json(r)}))
                        .collect();
                    match (all, items.len()) {
                        (false, 1) => println!("{}", items[0]["matroid"]),
                        _ => println!("{}", serde_json::Value::Array(items)),
                    }
                }
                Format::Text => {
                    for (b, r) in &results {
                        println!(
                            "unrelaxed {b}: rank {}, {} bases on {} elements",
                            r.rank(),
                            r.bases().len(),
                            r.size()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Delta { k, format } => {
            let d = closed_form::delta_set(k)?;
            match effective_format(format) {
                Format::Json => println!(
                    "{}",
                    json!({
                        "k": k,
                        "p": poly_to_json(&d.p),
                        "q": poly_to_json(&d.q),
                        "z": poly_to_json(&d.z),
                    })
                ),
                Format::Text => {
                    println!("p_{k} = {}", d.p);
                    println!("q_{k} = {}", d.q);
                    println!("z_{k} = {}", d.z);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Uniform { k, n, format } => {
            let t = closed_form::uniform_triple(k, n)?;
            match effective_format(format) {
                Format::Json => println!("{}", triple_json(&t, &['P', 'Q', 'Z'])),
                Format::Text => print_triple_text(&t, &['P', 'Q', 'Z']),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Sparse {
            n,
            k,
            lambda,
            format,
        } => {
            if closed_form::lambda_exceeds_bound(n, k, lambda)? {
                eprintln!(
                    "warning: lambda = {lambda} exceeds the bound {} for (n, k) = ({n}, {k})",
                    closed_form::lambda_bound(n, k)?
                );
            }
            let t = closed_form::sparse_paving_triple(n, k, lambda)?;
            match effective_format(format) {
                Format::Json => println!("{}", triple_json(&t, &['P', 'Q', 'Z'])),
                Format::Text => print_triple_text(&t, &['P', 'Q', 'Z']),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Scan {
            max_n,
            jobs,
            checks,
            failures_only,
            format,
        } => {
            if max_n > 30 {
                return Err("scan supports max_n up to 30".into());
            }
            let checks = parse_checks(&checks)?;
            let config = ScanConfig {
                max_n,
                checks,
                failures_only,
            };
            let report = match jobs {
                Some(jobs) => rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()?
                    .install(|| scan_sparse_paving(&config)),
                None => scan_sparse_paving(&config),
            }?;
            match effective_format(format) {
                Format::Json => {
                    let stdout = std::io::stdout();
                    report.write_jsonl(stdout.lock())?;
                    eprintln!("{}", report.human_summary());
                }
                Format::Text => {
                    println!("{}", report.human_summary());
                    for e in report.failing_entries() {
                        println!(
                            "FAIL n={} k={} lambda={}: p_real_rooted={} z_real_rooted={} \
                             q_log_concave={} all_nonnegative={}",
                            e.n,
                            e.k,
                            e.lambda,
                            e.p_real_rooted,
                            e.z_real_rooted,
                            e.q_log_concave,
                            e.all_nonnegative
                        );
                    }
                }
            }
            Ok(if report.zero_failures() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }

        Command::Verify {
            input,
            hyperplane,
            all,
            format,
        } => {
            let m = load_input(&input)?.into_matroid()?;
            let hyperplanes = targets(hyperplane, all, || m.circuit_hyperplanes(), "--hyperplane")?;
            let mut reports = Vec::new();
            for h in hyperplanes {
                reports.push(verify_relaxation(&m, h)?);
            }
            let ok = reports.iter().all(RelaxationReport::all_pass);
            match effective_format(format) {
                Format::Json => {
                    let items: Vec<_> = reports.iter().map(report_json).collect();
                    println!("{}", serde_json::Value::Array(items));
                }
                Format::Text => {
                    for r in &reports {
                        print_report_text(r);
                    }
                }
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }

        Command::Info { input, format } => {
            let m = load_input(&input)?.into_matroid()?;
            let structure = m.structure();
            let lattice = FlatLattice::build(&m)?;
            let chs = m.circuit_hyperplanes();
            let free = m.free_bases();
            match effective_format(format) {
                Format::Json => {
                    let mut obj = json!({
                        "n": m.size(),
                        "rank": m.rank(),
                        "bases": m.bases().len(),
                        "loops": structure.loops.elements(),
                        "coloops": structure.coloops.elements(),
                        "connected": structure.connected,
                        "sparse_paving": m.is_sparse_paving(),
                        "flats_per_rank": lattice.whitney_numbers(),
                        "circuit_hyperplanes": chs.iter().map(|h| h.elements()).collect::<Vec<_>>(),
                        "free_bases": free.iter().map(|b| b.elements()).collect::<Vec<_>>(),
                    });
                    if let Some(label) = m.label() {
                        obj["label"] = json!(label);
                    }
                    if m.size() <= MAX_TUTTE_GROUND_SET {
                        obj["tutte"] = bipoly_to_json(&tutte_polynomial(&m)?);
                    }
                    println!("{obj}");
                }
                Format::Text => {
                    if let Some(label) = m.label() {
                        println!("label: {label}");
                    }
                    println!("elements: {}", m.size());
                    println!("rank: {}", m.rank());
                    println!("bases: {}", m.bases().len());
                    println!("loops: {}", structure.loops);
                    println!("coloops: {}", structure.coloops);
                    println!("connected: {}", structure.connected);
                    println!("sparse paving: {}", m.is_sparse_paving());
                    println!("flats per rank: {:?}", lattice.whitney_numbers());
                    println!("circuit-hyperplanes: {}", format_subsets(&chs));
                    println!("free bases: {}", format_subsets(&free));
                    if m.size() <= MAX_TUTTE_GROUND_SET {
                        println!("Tutte: {}", tutte_polynomial(&m)?);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Resolve `--hyperplane x,y,z` / `--basis ...` vs `--all`.
fn targets(
    explicit: Option<String>,
    all: bool,
    enumerate: impl FnOnce() -> Vec<Subset>,
    flag: &str,
) -> Result<Vec<Subset>, AnyError> {
    match (explicit, all) {
        (Some(text), false) => Ok(vec![parse_subset(&text)?]),
        (None, true) => {
            let found = enumerate();
            if found.is_empty() {
                return Err("--all found no candidates".into());
            }
            Ok(found)
        }
        (None, false) => Err(format!("one of {flag} or --all is required").into()),
        (Some(_), true) => unreachable!("clap conflicts_with"),
    }
}

fn parse_checks(text: &str) -> Result<CheckSet, AnyError> {
    let mut checks = CheckSet::none();
    for part in text.split(',') {
        match part.trim() {
            "real-rooted" => {
                checks.p_real_rooted = true;
                checks.z_real_rooted = true;
            }
            "log-concave" => checks.q_log_concave = true,
            "nonneg" => checks.nonnegative = true,
            "" => {}
            other => {
                return Err(format!(
                    "unknown check {other:?} (expected real-rooted, log-concave, nonneg)"
                )
                .into())
            }
        }
    }
    if checks == CheckSet::none() {
        return Err("--checks selected nothing".into());
    }
    Ok(checks)
}

fn report_json(r: &RelaxationReport) -> serde_json::Value {
    json!({
        "hyperplane": r.hyperplane.elements(),
        "n": r.n,
        "rank": r.rank,
        "pass": r.all_pass(),
        "flats_identity": r.flats_identity,
        "tutte_identity": r.tutte_identity,
        "characteristic_identity": r.characteristic_identity,
        "p_delta_matches": r.p_delta_matches,
        "q_delta_matches": r.q_delta_matches,
        "z_delta_matches": r.z_delta_matches,
        "p_delta": poly_to_json(&r.observed_p_delta),
        "q_delta": poly_to_json(&r.observed_q_delta),
        "z_delta": poly_to_json(&r.observed_z_delta),
    })
}

fn print_report_text(r: &RelaxationReport) {
    let yn = |b: bool| if b { "ok" } else { "FAIL" };
    println!(
        "relaxation of {} (n = {}, rank = {}): {}",
        r.hyperplane,
        r.n,
        r.rank,
        if r.all_pass() { "all pass" } else { "FAILURES" }
    );
    println!("  flats identity:          {}", yn(r.flats_identity));
    match r.tutte_identity {
        Some(ok) => println!("  Tutte identity:          {}", yn(ok)),
        None => println!("  Tutte identity:          skipped (n > {MAX_TUTTE_GROUND_SET})"),
    }
    println!(
        "  characteristic identity: {}",
        yn(r.characteristic_identity)
    );
    println!(
        "  P delta = {} : {}",
        r.observed_p_delta,
        yn(r.p_delta_matches)
    );
    println!(
        "  Q delta = {} : {}",
        r.observed_q_delta,
        yn(r.q_delta_matches)
    );
    println!(
        "  Z delta = {} : {}",
        r.observed_z_delta,
        yn(r.z_delta_matches)
    );
}

fn format_subsets(subsets: &[Subset]) -> String {
    if subsets.is_empty() {
        return "none".into();
    }
    subsets
        .iter()
        .map(Subset::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
