//! `tseries` command-line front end.
//!
//! Exit status is 0 on success, 1 on usage or parse errors, and 2 when an
//! internal invariant fails.

pub mod json;
mod spec;

pub use spec::{parse_spec, ExpansionSpec, Family, ParseError};

use crate::partitions::{enumerate_partitions, enumerate_restricted};
use crate::special;
use crate::{Expansion, Poly, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use std::fmt::Write as _;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "tseries",
    version,
    about = "Exact power-series expansion via partition-indexed terms"
)]
struct Args {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand the series described by a spec (a file path or inline text).
    Expand {
        #[arg(long)]
        spec: String,
        /// Use the direct-composition path instead of partitions.
        #[arg(long)]
        oracle: bool,
    },
    /// List partitions of n, largest first.
    Partitions {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Restrict to these parts, e.g. `--parts 1,2`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        parts: Option<Vec<i64>>,
    },
    /// Legendre polynomial P_n(u).
    Legendre { n: usize },
    /// Probabilists' Hermite polynomial He_n(u).
    Hermite { n: usize },
    /// Bernoulli number B_n (B_1 = -1/2).
    Bernoulli { n: usize },
    /// Maclaurin coefficients of sec(x).
    Sec {
        #[arg(long)]
        order: usize,
    },
    /// Per-order angular factors of the two-charge potential.
    Multipole {
        #[arg(long)]
        order: usize,
    },
    /// Series of (1 - b^2)^(-1/2) in b.
    Gamma {
        #[arg(long)]
        order: usize,
    },
}

enum Output {
    Rational(Rational),
    Poly(Poly),
    Series(Expansion),
    /// `(first index, coefficients)`.
    Indexed(usize, Vec<Poly>),
    Partitions(Vec<crate::Partition>),
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut out = self.json().to_string();
                out.push('\n');
                out
            }
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Rational(q) => writeln!(out, "{q}").unwrap(),
            Output::Poly(p) => writeln!(out, "{p}").unwrap(),
            Output::Series(series) => {
                for (n, a) in series.coefficients().iter().enumerate() {
                    writeln!(out, "a{n} = {a}").unwrap();
                }
            }
            Output::Indexed(first, coeffs) => {
                for (i, a) in coeffs.iter().enumerate() {
                    writeln!(out, "a{} = {a}", first + i).unwrap();
                }
            }
            Output::Partitions(ps) => {
                for p in ps {
                    writeln!(out, "{p}").unwrap();
                }
            }
        }
        out
    }

    fn json(&self) -> Value {
        match self {
            Output::Rational(q) => json::rational_to_json(q),
            Output::Poly(p) => json::poly_to_json(p),
            Output::Series(series) => json::series_to_json(series),
            Output::Indexed(first, coeffs) => serde_json::json!({
                "first": first,
                "coefficients": coeffs.iter().map(json::poly_to_json).collect::<Vec<_>>(),
            }),
            Output::Partitions(ps) => json::partitions_to_json(ps),
        }
    }
}

fn load_spec(arg: &str) -> Result<String, String> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {arg}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn execute(command: Command) -> Result<Output, String> {
    Ok(match command {
        Command::Expand { spec, oracle } => {
            let spec = parse_spec(&load_spec(&spec)?).map_err(|e| format!("spec: {e}"))?;
            let series = if oracle {
                spec.perturbation()
                    .and_then(|p| crate::oracle_expand(&spec.derivatives(), &p, spec.order))
            } else {
                spec.expand()
            };
            Output::Series(series.map_err(|e| e.to_string())?)
        }
        Command::Partitions { n, parts } => {
            let n = usize::try_from(n).map_err(|_| format!("n must be non-negative, got {n}"))?;
            Output::Partitions(match parts {
                None => enumerate_partitions(n),
                Some(parts) => {
                    let parts = parts
                        .into_iter()
                        .map(|p| match usize::try_from(p) {
                            Ok(p) if p > 0 => Ok(p),
                            _ => Err(format!("parts must be positive, got {p}")),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    enumerate_restricted(n, &parts)
                }
            })
        }
        Command::Legendre { n } => Output::Poly(special::legendre(n)),
        Command::Hermite { n } => Output::Poly(special::hermite(n)),
        Command::Bernoulli { n } => Output::Rational(special::bernoulli(n)),
        Command::Sec { order } => Output::Series(special::sec_series(order)),
        Command::Multipole { order } => {
            if order == 0 {
                return Err("multipole order must be at least 1".into());
            }
            Output::Indexed(1, special::multipole_potential(order))
        }
        Command::Gamma { order } => Output::Series(special::lorentz_gamma(order)),
    })
}

/// Runs one invocation; `argv[0]` is the program name. Returns the exit status.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match Args::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(args) => args,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                1
            } else {
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    let format = args.format;
    match catch_unwind(AssertUnwindSafe(|| execute(args.command))) {
        Ok(Ok(output)) => match out.write_all(output.render(format).as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Ok(Err(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
        Err(_) => {
            let _ = writeln!(err, "error: internal invariant violated");
            2
        }
    }
}
