//! Command-line front end for `sgap-core`.
//!
//! [`run`] parses an argument vector and returns the exit code together with
//! everything written to stdout and stderr, so the binary and the tests share
//! one code path.

mod corpus;

use std::ffi::OsString;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use corpus::run_manifest;
use serde::Serialize;
use sgap_core::cfrac::{gapset_of_cf, parse_real, real_of_gapset, survey};
use sgap_core::cover::{
    default_max_delay, fischer_cover, is_right_resolving, left_closing_delay, period_and_classes,
};
use sgap_core::entropy::{entropy, entropy_bounds};
use sgap_core::gapset::{are_conjugate, classify, Conjugacy, GRAMMAR};
use sgap_core::language::{count_blocks, zeta_series};
use sgap_core::cover::Edge;
use sgap_core::{Error, GapSet};

pub use corpus::{CorpusReport, ItemReport, BUNDLED_MANIFEST};

/// Exit code for domain errors.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit code for usage errors.
pub const EXIT_USAGE: i32 = 2;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "sgap", version, about = "Decision procedures for S-gap shifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dynamical classification of X(S).
    Classify {
        #[command(flatten)]
        set: SetArg,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Entropy from the gap equation, or a bracket for sampled sets.
    Entropy {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Bracket from the first k elements.
        #[arg(long, value_name = "K")]
        bounds: Option<usize>,
    },
    /// Minimal right-resolving presentation (DOT by default).
    Graph {
        #[command(flatten)]
        set: SetArg,
        /// Write DOT to this file ("-" for stdout).
        #[arg(long, value_name = "FILE", conflicts_with = "json")]
        dot: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Periodic point counts and the rational zeta function.
    Zeta {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Block counts |B_n| for n = 1..N.
    Words {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, value_name = "N")]
        count: usize,
    },
    /// Whether X(A) and X(B) are conjugate.
    Conjugate {
        #[arg(long, value_name = "SPEC")]
        a: String,
        #[arg(long, value_name = "SPEC")]
        b: String,
    },
    /// Continued-fraction correspondence between gap sets and reals.
    Real(RealArgs),
    /// Frequency of mixing among random rationals.
    Survey {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 64)]
        horizon: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check a manifest of gap sets (the bundled corpus by default).
    Corpus {
        #[arg(long, value_name = "FILE")]
        manifest: Option<String>,
    },
}

#[derive(Debug, Args)]
struct SetArg {
    /// Gap set, see the grammar below.
    #[arg(long = "set", value_name = "SPEC")]
    spec: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct RealArgs {
    /// rat:p/q, quad:a,b,c,d, cf:[a0;a1,(m1,m2)] or dec:x,prec=N.
    #[arg(long, value_name = "REAL")]
    to_set: Option<String>,
    /// Gap set whose real number is wanted.
    #[arg(long, value_name = "SPEC")]
    from_set: Option<String>,
}

/// A failed command: the core error, or a file or manifest problem.
#[derive(Debug)]
pub(crate) struct Failure {
    kind: &'static str,
    hint: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let hint = match &e {
            Error::ExcludedPoint { hint, .. } => hint.clone(),
            other => other.to_string(),
        };
        Failure { kind: e.kind(), hint, message: e.to_string() }
    }
}

impl Failure {
    pub(crate) fn io(kind: &'static str, message: String) -> Self {
        Failure { kind, hint: message.clone(), message }
    }
}

// JSON shapes; field order is the output order.

#[derive(Serialize)]
struct ErrorOut<'a> {
    error: &'a str,
    hint: &'a str,
}

#[derive(Serialize)]
struct Entropy64 {
    lambda: f64,
    h: f64,
}

#[derive(Serialize)]
struct EntropyBounds64 {
    k: usize,
    lo: f64,
    hi: f64,
}

#[derive(Serialize)]
struct ConjugateOut {
    conjugate: bool,
    case: &'static str,
    n: Option<u64>,
}

#[derive(Serialize)]
struct GraphOut<'a> {
    states: usize,
    residuals: Vec<Option<String>>,
    u0: usize,
    period: usize,
    classes: Vec<Vec<usize>>,
    right_resolving: bool,
    left_closing_delay: Option<usize>,
    edges: &'a [Edge],
}

#[derive(Serialize)]
struct ToSetOut {
    cf: String,
    set: String,
}

#[derive(Serialize)]
struct ValueOut {
    exact: String,
    approx: f64,
}

#[derive(Serialize)]
struct FromSetOut {
    cf: String,
    value: Option<ValueOut>,
}

/// Round to 15 significant digits so reruns print identical text.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

fn parse_set(spec: &str) -> Result<GapSet, Failure> {
    Ok(spec.parse::<GapSet>()?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

/// Runs `sgap` on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = Cli::command().after_help(format!("Gap-set grammar:\n  {GRAMMAR}"));
    let cli = match cmd.try_get_matches_from(argv).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let json_mode = match &cli.command {
        Command::Classify { json, .. } | Command::Survey { json, .. } => *json,
        Command::Graph { json, .. } => *json,
        _ => true,
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => Outcome {
            code: EXIT_DOMAIN,
            stdout: if json_mode { to_json(&ErrorOut { error: f.kind, hint: &f.hint }) } else { String::new() },
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command) -> Result<(i32, String), Failure> {
    let out = match command {
        Command::Classify { set, json } => {
            let c = classify(&parse_set(&set.spec)?);
            if json {
                to_json(&c)
            } else {
                let mut s = String::new();
                for (name, v) in c.verdicts() {
                    s.push_str(&format!("{name}: {v}\n"));
                }
                for (name, w) in &c.witnesses {
                    s.push_str(&format!("  {name}: {w}\n"));
                }
                s
            }
        }
        Command::Entropy { set, tol, bounds } => {
            let g = parse_set(&set.spec)?;
            match bounds {
                Some(k) => {
                    let b = entropy_bounds::<f64>(&g, k, tol)?;
                    to_json(&EntropyBounds64 { k: b.k, lo: sig15(b.lo), hi: sig15(b.hi) })
                }
                None => {
                    let e = entropy::<f64>(&g, tol)?;
                    to_json(&Entropy64 { lambda: sig15(e.lambda), h: sig15(e.h) })
                }
            }
        }
        Command::Graph { set, dot, json } => graph(&parse_set(&set.spec)?, dot, json)?,
        Command::Zeta { set, order } => to_json(&zeta_series(&parse_set(&set.spec)?, order)?),
        Command::Words { set, count } => {
            let g = parse_set(&set.spec)?;
            let counts = (1..=count).map(|n| count_blocks(&g, n)).collect::<Result<Vec<_>, _>>()?;
            to_json(&counts)
        }
        Command::Conjugate { a, b } => {
            let c = are_conjugate(&parse_set(&a)?, &parse_set(&b)?)?;
            let n = match c {
                Conjugacy::ExceptionalPair { n } => Some(n),
                _ => None,
            };
            to_json(&ConjugateOut { conjugate: c.is_conjugate(), case: c.case(), n })
        }
        Command::Real(args) => real(args)?,
        Command::Survey { samples, horizon, seed, json } => {
            let mut s = survey(samples, horizon, seed)?;
            s.mixing_frequency = sig15(s.mixing_frequency);
            if json {
                to_json(&s)
            } else {
                format!(
                    "samples: {}\nhorizon: {}\nexcluded: {}\nadmitted: {}\nsft: {}\nmixing: {}\nnon_mixing: {}\nundecided: {}\nmixing_frequency: {}\n",
                    s.samples,
                    s.horizon,
                    s.excluded,
                    s.admitted,
                    s.sft,
                    s.mixing,
                    s.non_mixing,
                    s.undecided,
                    s.mixing_frequency
                )
            }
        }
        Command::Corpus { manifest } => {
            let text = match &manifest {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Failure::io("Io", format!("cannot read {path}: {e}")))?,
                None => BUNDLED_MANIFEST.to_string(),
            };
            let report = run_manifest(&text)?;
            let code = if report.failed == 0 { 0 } else { EXIT_DOMAIN };
            return Ok((code, to_json(&report)));
        }
    };
    Ok((0, out))
}

fn graph(g: &GapSet, dot: Option<String>, json: bool) -> Result<String, Failure> {
    let cover = fischer_cover(g)?;
    if json {
        let (period, classes) = period_and_classes(&cover)?;
        let meta = cover.meta.expect("covers carry their metadata");
        let residuals: Vec<Option<String>> = cover
            .residuals
            .iter()
            .map(|r| r.set.as_ref().map(|s| s.to_string()))
            .collect();
        return Ok(to_json(&GraphOut {
            states: cover.states,
            residuals,
            u0: meta.u0,
            period,
            classes,
            right_resolving: is_right_resolving(&cover),
            left_closing_delay: left_closing_delay(&cover, default_max_delay(&meta)),
            edges: &cover.edges,
        }));
    }
    let text = cover.to_dot();
    match dot.as_deref() {
        None | Some("-") => Ok(text),
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Failure::io("Io", format!("cannot write {path}: {e}")))?;
            Ok(String::new())
        }
    }
}

fn real(args: RealArgs) -> Result<String, Failure> {
    if let Some(x) = args.to_set {
        let cf = parse_real(&x)?;
        let set = gapset_of_cf(&cf)?;
        return Ok(to_json(&ToSetOut { cf: cf.to_string(), set: set.to_string() }));
    }
    let spec = args.from_set.expect("clap requires one of the two");
    let (cf, value) = real_of_gapset(&parse_set(&spec)?)?;
    let value = value.map(|v| ValueOut { exact: v.to_string(), approx: sig15(v.to_f64()) });
    Ok(to_json(&FromSetOut { cf: cf.to_string(), value }))
}
