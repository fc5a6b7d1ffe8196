//! Command-line front end. [`run`] returns the output instead of printing so
//! tests can drive it directly.

use std::collections::BTreeSet;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::actions::build_graph;
use crate::actions::{
    are_equivalent, labelled_orbit, second_extension, stratum_codimension, toric_extensions,
    ActionError, CircleAction,
};
use crate::algebra::{cohomology_presentation, homology_ranks, Characteristic, HomotopyType};
use crate::arith::Rational;
use crate::karshon::{canonical_form, to_dot, to_tikz};
use crate::report::build_report;
use crate::sweep::{run_sweep, Check, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "hamsym",
    version,
    about = "Classify Hamiltonian circle actions on S2xS2 and CP2#-CP2"
)]
struct Cli {
    /// Human-readable output instead of compact JSON
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ActionArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    #[arg(long)]
    m: u32,
    /// Exact rational such as 5/2; decimals are rejected
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    lambda: Rational,
}

impl ActionArgs {
    fn action(&self) -> Result<CircleAction, ActionError> {
        CircleAction::new(self.a, self.b, self.m, self.lambda.clone())
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tikz,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: graph, strata, homotopy type, ranks
    Classify(ActionArgs),
    /// Emit the labelled graph
    Graph {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Canonical representative under moment relabelling
        #[arg(long)]
        canonical: bool,
    },
    /// Decide whether two actions on the same manifold are equivalent
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, allow_hyphen_values = true)]
        b1: i64,
        #[arg(long)]
        m1: u32,
        #[arg(long, allow_hyphen_values = true)]
        a2: i64,
        #[arg(long, allow_hyphen_values = true)]
        b2: i64,
        #[arg(long)]
        m2: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Toric actions extending the circle action
    Extensions(ActionArgs),
    /// Complex codimension of an intersected stratum
    Codim {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long)]
        s: u32,
    },
    /// Betti numbers of a homotopy type
    Ranks {
        #[arg(long = "type")]
        homotopy_type: HomotopyType,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Cohomology ring of the pushout over a field
    Presentation {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Run the cross-checks over a parameter grid
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_ab: u32,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        /// Comma-separated rationals
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, default_value = "1,3/2,2,5/2,3,7/2")]
        lambdas: Vec<Rational>,
        /// Comma-separated check names, or "all"
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
    },
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value).expect("report types serialize")
    } else {
        serde_json::to_string(value).expect("report types serialize")
    };
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INVALID,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let pretty = cli.pretty;
    match cli.command {
        Command::Classify(args) => {
            let act = match args.action() {
                Ok(a) => a,
                Err(e) => return Outcome::fail(EXIT_INVALID, e),
            };
            match build_report(&act) {
                Ok(r) if pretty => Outcome::ok(r.render_text()),
                Ok(r) => Outcome::ok(emit(&r, false)),
                Err(b) => Outcome::fail(EXIT_BREACH, format!("internal invariant breach: {}", b.0)),
            }
        }
        Command::Graph {
            action,
            format,
            canonical,
        } => {
            let act = match action.action() {
                Ok(a) => a,
                Err(e) => return Outcome::fail(EXIT_INVALID, e),
            };
            let mut g = build_graph(&act);
            if canonical {
                g = canonical_form(&g);
            }
            Outcome::ok(match format {
                Format::Json => emit(&g, pretty),
                Format::Dot => to_dot(&g),
                Format::Tikz => to_tikz(&g),
            })
        }
        Command::Equiv {
            a1,
            b1,
            m1,
            a2,
            b2,
            m2,
            lambda,
        } => {
            let (x, y) = match (
                CircleAction::new(a1, b1, m1, lambda.clone()),
                CircleAction::new(a2, b2, m2, lambda),
            ) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return Outcome::fail(EXIT_INVALID, e),
            };
            if x.manifold() != y.manifold() {
                return Outcome::fail(
                    EXIT_INVALID,
                    format!(
                        "m1 = {m1} and m2 = {m2} have different parity, so the manifolds differ"
                    ),
                );
            }
            let equivalent = match are_equivalent(&x, &y) {
                Ok(v) => v,
                Err(e) => return Outcome::fail(EXIT_INVALID, e),
            };
            let witness = witness(&x, &y, equivalent);
            Outcome::ok(emit(
                &json!({"equivalent": equivalent, "witness": witness}),
                pretty,
            ))
        }
        Command::Extensions(args) => match args.action() {
            Ok(act) => Outcome::ok(emit(&toric_extensions(&act), pretty)),
            Err(e) => Outcome::fail(EXIT_INVALID, e),
        },
        Command::Codim { action, s } => {
            let act = match action.action() {
                Ok(a) => a,
                Err(e) => return Outcome::fail(EXIT_INVALID, e),
            };
            match stratum_codimension(&act, s) {
                Ok(c) => Outcome::ok(emit(&json!({"s": s, "codim": c}), pretty)),
                Err(e) => Outcome::fail(EXIT_INVALID, e),
            }
        }
        Command::Ranks {
            homotopy_type,
            max_degree,
            characteristic,
        } => match Characteristic::new(characteristic) {
            Ok(c) => Outcome::ok(emit(&homology_ranks(homotopy_type, max_degree, c), pretty)),
            Err(e) => Outcome::fail(EXIT_INVALID, e),
        },
        Command::Presentation { characteristic } => match Characteristic::new(characteristic) {
            Ok(c) => Outcome::ok(emit(&cohomology_presentation(c), pretty)),
            Err(e) => Outcome::fail(EXIT_INVALID, e),
        },
        Command::Sweep {
            max_ab,
            max_m,
            lambdas,
            checks,
        } => {
            let checks: Result<BTreeSet<Check>, String> = if checks.iter().any(|c| c == "all") {
                Ok(Check::ALL.into_iter().collect())
            } else {
                checks.iter().map(|c| c.parse()).collect()
            };
            let config = match checks.map_err(|e| e.to_string()).and_then(|c| {
                SweepConfig::new(max_ab, max_m, lambdas, c).map_err(|e| e.to_string())
            }) {
                Ok(c) => c,
                Err(e) => return Outcome::fail(EXIT_INVALID, e),
            };
            let summary = run_sweep(&config);
            let code = if summary.total_failures() == 0 {
                EXIT_OK
            } else {
                1
            };
            Outcome {
                stdout: summary.render(),
                stderr: String::new(),
                code,
            }
        }
    }
}

// names the orbit element or extension relating the two presentations
fn witness(x: &CircleAction, y: &CircleAction, equivalent: bool) -> Option<String> {
    if !equivalent {
        return None;
    }
    if x.m() == y.m() {
        if let Some((_, rel)) = labelled_orbit(x)
            .into_iter()
            .find(|(p, _)| *p == (y.a(), y.b()))
        {
            return Some(rel.to_string());
        }
    } else if let Some((n, (c, d))) = second_extension(x) {
        if n == y.m() {
            return Some(format!("toric-extension: S1({c},{d};{n})"));
        }
    }
    Some("graph".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run(std::iter::once("hamsym").chain(args.split_whitespace()))
    }

    #[test]
    fn classify_two_strata() {
        let out = cli("classify --a 1 --b 1 --m 2 --lambda 2");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["homotopy_type"], "OmegaS3xT3");
        assert_eq!(v["strata"][0]["s"], 2);
        assert_eq!(v["strata"][0]["codim"], 1);
        assert_eq!(v["strata"][1]["s"], 0);
        assert_eq!(v["strata"][1]["codim"], 0);
    }

    #[test]
    fn classify_errors_exit_2() {
        let out = cli("classify --a 2 --b 4 --m 2 --lambda 2");
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("non-effective action"));
        let out = cli("classify --a 1 --b 1 --m 2 --lambda 1");
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("lambda - k > 0"), "{}", out.stderr);
        let out = cli("classify --a 1 --b 1 --m 2 --lambda 2.5");
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("2.5"), "{}", out.stderr);
    }

    #[test]
    fn negative_flags_parse() {
        let out = cli("graph --a -1 --b 0 --m 2 --lambda 2 --canonical");
        let pos = cli("graph --a 1 --b 0 --m 2 --lambda 2 --canonical");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, pos.stdout);
    }

    #[test]
    fn help_exits_zero() {
        let out = cli("--help");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("classify"));
    }
}
