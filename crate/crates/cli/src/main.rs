//! `igusa`: exact Igusa zeta functions of monomial ideals from the command
//! line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad
//! input.

mod input;
mod render;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use igusa_core::corpus::{corpus, verify_all, CorpusLimits};
use thiserror::Error;

use crate::input::{read_inputs, Input};

/// Largest accepted `--bound`; the direct-sum oracle enumerates all points
/// of `N^n` with coordinate sum up to the bound.
const MAX_BOUND: u32 = 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] igusa_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser)]
#[command(name = "igusa", version, about = "Exact Igusa zeta functions of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Monomial list such as "x^2*y, y^3", or a JSON ideal or exponent matrix.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    ideal: Option<String>,
    /// File with one or more ideals (monomial lists one per line, JSON, or
    /// JSON Lines); `-` reads standard input.
    #[arg(long)]
    file: Option<String>,
    /// Comma-separated variable order, e.g. "x,y,z".
    #[arg(long)]
    vars: Option<String>,
    /// Print one JSON object per ideal instead of text.
    #[arg(long)]
    json: bool,
}

impl InputArgs {
    fn read(&self) -> Result<Vec<Input>, CliError> {
        read_inputs(self.ideal.as_deref(), self.file.as_deref(), self.vars.as_deref())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced zeta function, divisor table and poles.
    Zeta {
        #[command(flatten)]
        input: InputArgs,
        /// Also substitute P = 1/p for this prime.
        #[arg(long)]
        prime: Option<u64>,
        /// Also print the zeta function as LaTeX.
        #[arg(long)]
        latex: bool,
    },
    /// Vertices and facets of the Newton polyhedron.
    Newton {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Normal fan with the open generating function of each cone.
    Fan {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Numerical data (k_E, a_E) of each fan ray and the candidate poles.
    Divisors {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Facet roots, log canonical threshold and the pole/root check.
    Bsroots {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare against the direct lattice-point sum and check the poles.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Series comparison up to this P-degree.
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
    /// Verify a seeded random corpus and write a JSON Lines report.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 5)]
        max_exponent: i64,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        /// Report path; without it the report goes to standard output and
        /// the summary to standard error.
        #[arg(long)]
        out: Option<String>,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn check_bound(bound: u32) -> Result<(), CliError> {
    if bound > MAX_BOUND {
        return Err(CliError::Usage(format!("--bound {bound} exceeds the maximum {MAX_BOUND}")));
    }
    Ok(())
}

/// Run a command; `Ok(false)` means a verification failed.
fn run(command: Command) -> Result<bool, CliError> {
    let mut out = std::io::stdout().lock();
    match command {
        Command::Zeta { input, prime, latex } => {
            for i in input.read()? {
                writeln!(out, "{}", render::zeta(&i, prime, latex, input.json)?)?;
            }
            Ok(true)
        }
        Command::Newton { input } => {
            for i in input.read()? {
                writeln!(out, "{}", render::newton(&i, input.json))?;
            }
            Ok(true)
        }
        Command::Fan { input } => {
            for i in input.read()? {
                writeln!(out, "{}", render::fan(&i, input.json)?)?;
            }
            Ok(true)
        }
        Command::Divisors { input } => {
            for i in input.read()? {
                writeln!(out, "{}", render::divisors(&i, input.json))?;
            }
            Ok(true)
        }
        Command::Bsroots { input } => {
            let mut pass = true;
            for i in input.read()? {
                let (text, ok) = render::bsroots(&i, input.json)?;
                writeln!(out, "{text}")?;
                pass &= ok;
            }
            Ok(pass)
        }
        Command::Verify { input, bound } => {
            check_bound(bound)?;
            let inputs = input.read()?;
            let ideals: Vec<_> = inputs.iter().map(|i| i.ideal.clone()).collect();
            let results = verify_all(&ideals, bound)?;
            for (i, v) in inputs.iter().zip(&results) {
                writeln!(out, "{}", render::verification(i, v, input.json))?;
            }
            let passed = results.iter().filter(|v| v.pass).count();
            if !input.json && results.len() > 1 {
                writeln!(out, "{passed}/{} pass", results.len())?;
            }
            Ok(passed == results.len())
        }
        Command::Corpus {
            seed,
            count,
            max_n,
            max_generators,
            max_exponent,
            bound,
            out: path,
            json,
        } => {
            check_bound(bound)?;
            if max_n == 0 || max_generators == 0 || max_exponent < 1 {
                return Err(CliError::Usage(
                    "--max-n, --max-generators and --max-exponent must be at least 1".into(),
                ));
            }
            let limits = CorpusLimits {
                max_n,
                max_generators,
                max_exponent,
            };
            let results = verify_all(&corpus(seed, count, &limits), bound)?;
            let report = render::corpus_report(&results);
            let summary = render::corpus_summary(seed, &limits, bound, &results, json);
            match path {
                Some(p) => {
                    fs::write(&p, report).map_err(|e| CliError::Usage(format!("cannot write {p}: {e}")))?;
                    writeln!(out, "{summary}")?;
                }
                None => {
                    out.write_all(report.as_bytes())?;
                    eprintln!("{summary}");
                }
            }
            Ok(results.iter().all(|v| v.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(cli.command);
    if let Err(e) = &outcome {
        eprintln!("error: {e}");
    }
    ExitCode::from(status(&outcome))
}

fn status(outcome: &Result<bool, CliError>) -> u8 {
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_verification_exits_one() {
        assert_eq!(status(&Ok(true)), 0);
        assert_eq!(status(&Ok(false)), 1);
        assert_eq!(status(&Err(CliError::Usage("x".into()))), 2);
        assert_eq!(status(&Err(igusa_core::Error::NotPrime(4).into())), 2);
    }
}
