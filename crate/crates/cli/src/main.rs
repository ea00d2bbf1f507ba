//! Command-line front end: JSON in, JSON out.
//!
//! Exit codes: 0 = success/classified, 1 = input error, 2 = numeric failure
//! (non-convergence, consistency), 3 = verification failure (an identity
//! check found a mismatch — always a bug witness).

mod json;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use poscone_core::cone;
use poscone_core::elim;
use poscone_core::starlike;
use poscone_core::verify::{self, SuiteReport};

use json::{Mode, PolyIn, TrigIn};

const EXIT_INPUT: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "poscone",
    about = "Certificates for nonnegative trigonometric polynomials: \
             Fejér–Riesz factorization, cone membership, resultant and \
             discriminant forms, starlike univalence."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field for inputs and exact reports.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,

    /// Relative classification tolerance (Inside/Boundary/Outside bands).
    #[arg(long, global = true, default_value_t = cone::DEFAULT_TOL)]
    tol: f64,

    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,

    /// Emit compact JSON (the default; kept for symmetry with --pretty).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Args)]
struct InputArg {
    /// Input: a file path, inline JSON (starts with '{' or '['), or '-' for
    /// standard input. An array input is processed as a batch.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a trigonometric polynomial {"n": .., "y": [..]} against the
    /// nonnegativity cone, with certificates.
    Check(InputArg),
    /// Compute the outer Fejér–Riesz factor of a nonnegative polynomial.
    Factor(InputArg),
    /// Evaluate the boundary form Dis2 of {"n": .., "y": [..]}.
    Dis2(InputArg),
    /// Resultant of {"p": poly, "q": poly} at their formal degrees.
    Resultant(InputArg),
    /// Discriminant of a polynomial {"degree": .., "coeffs": [..]}.
    Discriminant(InputArg),
    /// Möbius discriminant V(X) = Res(X*, X) of a polynomial.
    Mobius(InputArg),
    /// Starlike-univalence test of a polynomial with P(0) = 0.
    Starlike(InputArg),
    /// Run the lemma and oracle-equivalence suites; exit 3 on any mismatch.
    Verify {
        /// Which suite to run (default: all).
        #[arg(long, value_enum, default_value_t = Suite::All)]
        lemma: Suite,
        /// Restrict to a single degree (default: each suite's full range).
        #[arg(long)]
        n: Option<usize>,
        /// Samples per (suite, degree); defaults are per-suite.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed of the deterministic sample stream (reports are reproducible).
        #[arg(long)]
        seed: u64,
    },
    /// Re-check the closed-form degree-1 and degree-2 identities at random
    /// exact points; exit 3 on any residual.
    Examples {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "1")]
    Lemma1,
    #[value(name = "2")]
    Lemma2,
    #[value(name = "3")]
    Lemma3,
    Oracles,
    All,
}

enum Failure {
    Input(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Numeric(_) => EXIT_NUMERIC,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Numeric(m) => m,
        }
    }
}

fn core_failure(e: poscone_core::Error) -> Failure {
    if e.is_numeric() {
        Failure::Numeric(e.to_string())
    } else {
        Failure::Input(e.to_string())
    }
}

fn input_failure(m: String) -> Failure {
    Failure::Input(m)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are not errors; anything else is bad input
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mode = match cli.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Float => Mode::Float,
    };
    let (report, code) = match &cli.command {
        Command::Verify {
            lemma,
            n,
            samples,
            seed,
        } => run_verify(*lemma, *n, *samples, *seed),
        Command::Examples { samples, seed } => run_examples(*samples, *seed),
        data_command => match read_input(data_input(data_command)) {
            Err(f) => {
                eprintln!("error: {}", f.message());
                return ExitCode::from(f.code());
            }
            Ok(Value::Array(items)) => {
                let results: Vec<(Value, u8)> = items
                    .par_iter()
                    .map(|item| match run_data(data_command, item, mode, cli.tol) {
                        Ok(v) => (json!({ "ok": v }), 0),
                        Err(f) => (json!({ "error": f.message(), "code": f.code() }), f.code()),
                    })
                    .collect();
                let code = results.iter().map(|(_, c)| *c).max().unwrap_or(0);
                (
                    Value::Array(results.into_iter().map(|(v, _)| v).collect()),
                    code,
                )
            }
            Ok(single) => match run_data(data_command, &single, mode, cli.tol) {
                Ok(v) => (v, 0),
                Err(f) => {
                    eprintln!("error: {}", f.message());
                    return ExitCode::from(f.code());
                }
            },
        },
    };

    let text = if cli.pretty {
        serde_json::to_string_pretty(&report).expect("serializable report")
    } else {
        serde_json::to_string(&report).expect("serializable report")
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(code)
}

fn data_input(cmd: &Command) -> &str {
    match cmd {
        Command::Check(a)
        | Command::Factor(a)
        | Command::Dis2(a)
        | Command::Resultant(a)
        | Command::Discriminant(a)
        | Command::Mobius(a)
        | Command::Starlike(a) => &a.input,
        _ => unreachable!("verify/examples take no input payload"),
    }
}

fn read_input(arg: &str) -> Result<Value, Failure> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_failure(format!("cannot read stdin: {e}")))?;
        buf
    } else if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| input_failure(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| input_failure(format!("invalid JSON: {e}")))
}

fn run_data(cmd: &Command, input: &Value, mode: Mode, tol: f64) -> Result<Value, Failure> {
    match cmd {
        Command::Check(_) => match json::parse_trig(input, mode).map_err(input_failure)? {
            TrigIn::Exact(y) => Ok(json::verdict_json(
                &cone::classify(&y, tol).map_err(core_failure)?,
            )),
            TrigIn::Float(y) => Ok(json::verdict_json(
                &cone::classify(&y, tol).map_err(core_failure)?,
            )),
        },
        Command::Factor(_) => {
            let factor = match json::parse_trig(input, mode).map_err(input_failure)? {
                TrigIn::Exact(y) => cone::factor(&y, tol),
                TrigIn::Float(y) => cone::factor(&y, tol),
            }
            .map_err(core_failure)?;
            Ok(json::poly_json(factor.poly()))
        }
        Command::Dis2(_) => match json::parse_trig(input, mode).map_err(input_failure)? {
            TrigIn::Exact(y) => {
                let d = elim::dis2(&y).map_err(core_failure)?;
                Ok(json!({ "op": "dis2", "value": json::JsonScalar::real_json(&d) }))
            }
            TrigIn::Float(y) => {
                let d = elim::dis2(&y).map_err(core_failure)?;
                Ok(json!({ "op": "dis2", "value": json::JsonScalar::real_json(&d) }))
            }
        },
        Command::Resultant(_) => {
            let obj = input
                .as_object()
                .ok_or_else(|| input_failure("expected {\"p\": poly, \"q\": poly}".into()))?;
            let p = obj
                .get("p")
                .ok_or_else(|| input_failure("missing \"p\"".into()))?;
            let q = obj
                .get("q")
                .ok_or_else(|| input_failure("missing \"q\"".into()))?;
            let pair = (
                json::parse_poly(p, mode).map_err(input_failure)?,
                json::parse_poly(q, mode).map_err(input_failure)?,
            );
            let value = match pair {
                (PolyIn::Exact(p), PolyIn::Exact(q)) => {
                    json::JsonScalar::scalar_json(&elim::resultant(&p, &q))
                }
                (PolyIn::Float(p), PolyIn::Float(q)) => {
                    json::JsonScalar::scalar_json(&elim::resultant(&p, &q))
                }
                _ => unreachable!("one mode per run"),
            };
            Ok(json!({ "op": "resultant", "value": value }))
        }
        Command::Discriminant(_) => {
            let value = match json::parse_poly(input, mode).map_err(input_failure)? {
                PolyIn::Exact(p) => {
                    json::JsonScalar::scalar_json(&elim::discriminant(&p).map_err(core_failure)?)
                }
                PolyIn::Float(p) => {
                    json::JsonScalar::scalar_json(&elim::discriminant(&p).map_err(core_failure)?)
                }
            };
            Ok(json!({ "op": "discriminant", "value": value }))
        }
        Command::Mobius(_) => {
            let value = match json::parse_poly(input, mode).map_err(input_failure)? {
                PolyIn::Exact(p) => json::JsonScalar::real_json(&elim::mobius_discriminant(&p)),
                PolyIn::Float(p) => json::JsonScalar::real_json(&elim::mobius_discriminant(&p)),
            };
            Ok(json!({ "op": "mobius", "value": value }))
        }
        Command::Starlike(_) => match json::parse_poly(input, mode).map_err(input_failure)? {
            PolyIn::Exact(p) => Ok(json::starlike_json(
                &starlike::is_starlike(&p, tol).map_err(core_failure)?,
            )),
            PolyIn::Float(p) => Ok(json::starlike_json(
                &starlike::is_starlike(&p, tol).map_err(core_failure)?,
            )),
        },
        _ => unreachable!("verify/examples handled separately"),
    }
}

fn suite_json(r: &SuiteReport) -> Value {
    json!({
        "name": r.name,
        "n": r.n,
        "samples": r.samples,
        "passed": r.passed,
        "failed": r.failures.len(),
        "witnesses": r.failures.iter().take(20).collect::<Vec<_>>(),
    })
}

fn run_verify(suite: Suite, n: Option<usize>, samples: Option<usize>, seed: u64) -> (Value, u8) {
    // (suite default range, default sample count)
    let degrees = |lo: usize, hi: usize| -> Vec<usize> {
        match n {
            Some(v) => vec![v.clamp(lo, hi)],
            None => (lo..=hi).collect(),
        }
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    if matches!(suite, Suite::Lemma1 | Suite::All) {
        for d in degrees(1, 5) {
            reports.push(verify::lemma1_suite(
                d,
                samples.unwrap_or(50),
                seed + d as u64,
            ));
        }
    }
    if matches!(suite, Suite::Lemma2 | Suite::All) {
        for d in degrees(1, 4) {
            reports.push(verify::lemma2_suite(
                d,
                samples.unwrap_or(25),
                seed + d as u64,
            ));
        }
    }
    if matches!(suite, Suite::Lemma3 | Suite::All) {
        for d in degrees(2, 5) {
            reports.push(verify::lemma3_suite(
                d,
                samples.unwrap_or(20),
                seed + d as u64,
            ));
        }
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        let float_samples = samples.unwrap_or(100);
        let exact_samples = samples.map(|s| s / 2).unwrap_or(50).max(1);
        reports.push(verify::oracle_resultant_suite(
            float_samples,
            exact_samples,
            seed,
        ));
        reports.push(verify::oracle_discriminant_suite(
            float_samples,
            exact_samples,
            seed + 1,
        ));
    }
    let ok = reports.iter().all(SuiteReport::ok);
    let value = json!({
        "suites": reports.iter().map(suite_json).collect::<Vec<_>>(),
        "ok": ok,
    });
    (value, if ok { 0 } else { EXIT_VERIFY })
}

fn run_examples(samples: usize, seed: u64) -> (Value, u8) {
    let reports = [
        verify::example1_suite(samples, seed),
        verify::example2_suite(samples, seed + 1),
    ];
    let ok = reports.iter().all(SuiteReport::ok);
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut v = suite_json(r);
            // identities are exact: any nonzero residual is carried in the
            // witnesses, a clean run has residual 0 at every sampled point
            v["residual"] = json!(if r.ok() { "0" } else { "nonzero" });
            v
        })
        .collect();
    let value = json!({ "suites": suites, "ok": ok });
    (value, if ok { 0 } else { EXIT_VERIFY })
}
