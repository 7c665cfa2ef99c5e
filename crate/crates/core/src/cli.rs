//! Command-line front end. Parsing lives here (not in `main.rs`) so the
//! commands can be driven from tests without spawning a process.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::cf::{certify_by_doubling, running_max, CfError, CfExpansion};
use crate::laurent::{SeriesError, TruncatedSeries};
use crate::rat::Rat;
use crate::theorem::{CheckOutcome, ClosedFormContext, IdentityId, TheoremError};
use crate::word::{prefix_string, theta_source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

pub const DEFAULT_PRECISION: usize = 64;
pub const DEFAULT_PRECISION_CAP: usize = 1 << 20;

/// Deepest expansion `identities` builds by default: a_1..a_28, the `n = 6`
/// block.
const DEFAULT_IDENTITY_TERMS: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "laurent-cf",
    version,
    about = "Continued fraction of the generating series of the word 1221212122..."
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Starting series precision for the doubling search.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION, value_parser = positive)]
    pub precision: usize,

    /// Give up once the series precision would exceed this many coefficients.
    #[arg(long = "precision-cap", global = true, default_value_t = DEFAULT_PRECISION_CAP)]
    pub precision_cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the first K letters of the word.
    Word { k: usize },
    /// Print the truncated series of theta at `--precision` coefficients.
    Series,
    /// Print certified partial quotients of theta.
    Expand {
        #[arg(long, value_parser = positive)]
        terms: usize,
    },
    /// Print the predicted quotients a_{4n+1}..a_{4n+4}.
    ClosedForm {
        #[arg(long = "n", value_parser = positive)]
        n: usize,
    },
    /// Run the identity suite for 1 <= n <= N_MAX.
    Identities {
        #[arg(long = "n-max", value_parser = positive)]
        n_max: usize,
        /// Expansion depth used by identities that need one.
        #[arg(long, value_parser = positive, default_value_t = DEFAULT_IDENTITY_TERMS)]
        terms: usize,
    },
    /// Compare the expansion with the closed forms for n <= N_MAX.
    Verify {
        #[arg(long = "n-max", value_parser = positive)]
        n_max: usize,
    },
    /// Print the degree-based irrationality measure estimates.
    Measure {
        #[arg(long, value_parser = positive)]
        terms: usize,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_string()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Usage(String),
    #[error("{0}")]
    Precision(CfError),
    #[error(transparent)]
    Cf(CfError),
    #[error(transparent)]
    Theorem(TheoremError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<CfError> for CliError {
    fn from(e: CfError) -> Self {
        match e {
            CfError::PrecisionCap { .. } => CliError::Precision(e),
            other => CliError::Cf(other),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Cf(cf) => cf.into(),
            other => CliError::Theorem(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Precision(_) => EXIT_PRECISION,
            _ => EXIT_FAILURE,
        }
    }
}

/// A finished report. `exit_code` is nonzero when checks failed; the report
/// is still worth printing in that case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.precision == 0 || cfg.precision_cap < cfg.precision {
        return Err(CliError::Usage(format!(
            "need precision-cap >= precision >= 1, got {} and {}",
            cfg.precision_cap, cfg.precision
        )));
    }
    let fmt = cfg.format;
    let (output, exit_code) = match &cfg.command {
        Command::Word { k } => (word_report(*k, fmt), EXIT_OK),
        Command::Series => (series_report(cfg.precision, fmt)?, EXIT_OK),
        Command::Expand { terms } => {
            let e = theta_expansion(cfg, *terms)?;
            (expand_report(&e, *terms, fmt), EXIT_OK)
        }
        Command::ClosedForm { n } => (closed_form_report(*n, fmt)?, EXIT_OK),
        Command::Identities { n_max, terms } => {
            let checks = identity_suite(cfg, *n_max, *terms)?;
            checks_outcome(&checks, fmt)
        }
        Command::Verify { n_max } => {
            let e = theta_expansion(cfg, 4 * n_max + 4)?;
            let checks = ClosedFormContext::new().verify(&e, *n_max)?;
            checks_outcome(&checks, fmt)
        }
        Command::Measure { terms } => {
            let e = theta_expansion(cfg, *terms)?;
            (measure_report(&e, fmt)?, EXIT_OK)
        }
    };
    Ok(Outcome { output, exit_code })
}

/// Runs `cfg` and writes the report to `--out` or returns it for stdout.
/// Returns the text destined for standard output and the exit code.
pub fn run_to_sink(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let outcome = run(cfg)?;
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, &outcome.output)?;
            Ok((String::new(), outcome.exit_code))
        }
        None => Ok((outcome.output, outcome.exit_code)),
    }
}

fn theta_expansion(cfg: &RunConfig, terms: usize) -> Result<CfExpansion, CliError> {
    Ok(certify_by_doubling(
        Arc::new(theta_source()),
        terms,
        cfg.precision,
        cfg.precision_cap,
    )?)
}

fn word_report(k: usize, fmt: Format) -> String {
    let word = prefix_string(k);
    match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct WordJson<'a> {
                k: usize,
                word: &'a str,
            }
            json_line(&WordJson { k, word: &word })
        }
        Format::Plain | Format::Csv => format!("{word}\n"),
    }
}

fn series_report(n: usize, fmt: Format) -> Result<String, CliError> {
    let s = TruncatedSeries::from_source(Arc::new(theta_source()), n)?;
    Ok(match fmt {
        Format::Json => format!("{}\n", s.to_json()),
        Format::Plain => {
            let parts: Vec<String> = s.coeffs().iter().map(Rat::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
        Format::Csv => {
            let mut out = String::from("i,c\n");
            for (i, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{},{}", i + 1, c);
            }
            out
        }
    })
}

fn expand_report(e: &CfExpansion, terms: usize, fmt: Format) -> String {
    let records: Vec<_> = e.records().into_iter().take(terms).collect();
    match fmt {
        Format::Json => json_line(&records),
        Format::Plain => {
            let mut out = String::new();
            for r in &records {
                let _ = writeln!(
                    out,
                    "a_{} = {}  (deg {}, lambda {}, mu {}{})",
                    r.n,
                    r.a,
                    r.deg,
                    r.lambda,
                    r.mu,
                    if r.certified { "" } else { ", uncertified" }
                );
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,deg,lambda,certified\n");
            for r in &records {
                let _ = writeln!(out, "{},{},{},{}", r.n, r.deg, r.lambda, r.certified);
            }
            out
        }
    }
}

#[derive(Serialize)]
struct PredictedQuotient {
    index: usize,
    a: String,
    deg: usize,
    lambda: Rat,
}

fn closed_form_report(n: usize, fmt: Format) -> Result<String, CliError> {
    let q = ClosedFormContext::new().quadruple(n)?;
    let rows: Vec<PredictedQuotient> = q
        .quotients()
        .iter()
        .zip(&q.lambdas)
        .enumerate()
        .map(|(j, (a, lambda))| PredictedQuotient {
            index: 4 * n + j + 1,
            a: a.to_string(),
            deg: a.degree().unwrap_or(0),
            lambda: lambda.clone(),
        })
        .collect();
    Ok(match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct QuadJson {
                n: usize,
                quotients: Vec<PredictedQuotient>,
            }
            json_line(&QuadJson { n, quotients: rows })
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "a_{} = {}  (deg {}, lambda {})", r.index, r.a, r.deg, r.lambda);
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,deg,lambda\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{}", r.index, r.deg, r.lambda);
            }
            out
        }
    })
}

/// Every identity at every `n ≤ n_max` it is stated for, restricted to the
/// depth a `terms`-quotient expansion of θ can support.
pub fn identity_suite(
    cfg: &RunConfig,
    n_max: usize,
    terms: usize,
) -> Result<Vec<CheckOutcome>, CliError> {
    let ctx = ClosedFormContext::new();
    let needs_expansion = IdentityId::ALL.iter().any(|id| {
        id.needs_expansion() && (id.min_n()..=n_max).any(|n| id.depth_needed(n) <= terms)
    });
    let e = if needs_expansion {
        Some(theta_expansion(cfg, terms)?)
    } else {
        None
    };
    let mut out = Vec::new();
    for id in IdentityId::ALL {
        let last = if id == IdentityId::Eq9 { 1 } else { n_max };
        for n in id.min_n()..=last {
            if id.depth_needed(n) > terms {
                break;
            }
            out.push(ctx.check_identity(id, n, e.as_ref())?);
        }
    }
    Ok(out)
}

fn checks_outcome(checks: &[CheckOutcome], fmt: Format) -> (String, i32) {
    let failures = checks.iter().filter(|c| !c.ok).count();
    let output = match fmt {
        Format::Json => json_line(&checks),
        Format::Plain => checks.iter().map(|c| format!("{c}\n")).collect(),
        Format::Csv => {
            let mut out = String::from("check,n,ok,residual\n");
            for c in checks {
                let _ = writeln!(out, "{},{},{},{}", c.check, c.n, c.ok, c.residual);
            }
            out
        }
    };
    let code = if failures == 0 { EXIT_OK } else { EXIT_VERIFY };
    (output, code)
}

fn measure_report(e: &CfExpansion, fmt: Format) -> Result<String, CliError> {
    let est = e.measure_estimate()?;
    let max = running_max(&est).expect("at least one estimate");
    #[derive(Serialize)]
    struct Row {
        n: usize,
        nu: Rat,
        nu_approx: f64,
        running_max: Rat,
    }
    let mut running = Rat::zero();
    let rows: Vec<Row> = est
        .iter()
        .map(|(n, v)| {
            if *v > running {
                running = v.clone();
            }
            Row {
                n: *n,
                nu: v.clone(),
                nu_approx: v.to_f64(),
                running_max: running.clone(),
            }
        })
        .collect();
    Ok(match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct MeasureJson {
                estimates: Vec<Row>,
                max: Rat,
                max_approx: f64,
            }
            json_line(&MeasureJson {
                max_approx: max.to_f64(),
                max,
                estimates: rows,
            })
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "n={} nu={} ({:.6})", r.n, r.nu, r.nu_approx);
            }
            let _ = writeln!(out, "max={} ({:.6})", max, max.to_f64());
            out
        }
        Format::Csv => {
            let mut out = String::from("n,nu,nu_approx,running_max\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{:.6},{}", r.n, r.nu, r.nu_approx, r.running_max);
            }
            out
        }
    })
}

fn json_line<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        let mut full = vec!["laurent-cf"];
        full.extend_from_slice(args);
        RunConfig::try_parse_from(full).unwrap()
    }

    #[test]
    fn failed_check_exits_four() {
        let bad = CheckOutcome {
            check: "(E_n)".into(),
            n: 1,
            ok: false,
            residual: crate::poly::Poly::one(),
        };
        let (text, code) = checks_outcome(&[bad], Format::Plain);
        assert_eq!(code, EXIT_VERIFY);
        assert!(text.starts_with("FAIL (E_n) n=1"), "{text}");
    }

    #[test]
    fn word_command() {
        let out = run(&cfg(&["word", "12"])).unwrap();
        assert_eq!(out.output, "122121212212\n");
        assert_eq!(out.exit_code, EXIT_OK);
    }

    #[test]
    fn rejects_zero_terms_and_bad_cap() {
        assert!(RunConfig::try_parse_from(["laurent-cf", "expand", "--terms", "0"]).is_err());
        assert!(RunConfig::try_parse_from(["laurent-cf", "word", "--precision", "0", "3"]).is_err());
        let c = cfg(&["--precision", "64", "--precision-cap", "8", "word", "3"]);
        assert_eq!(run(&c).unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn precision_cap_exit_code() {
        let c = cfg(&["expand", "--terms", "12", "--precision", "4", "--precision-cap", "16"]);
        let err = run(&c).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PRECISION, "{err}");
    }

    #[test]
    fn series_json() {
        let out = run(&cfg(&["series", "--precision", "4", "--format", "json"])).unwrap();
        assert_eq!(out.output, "{\"N\":4,\"coeffs\":[\"1\",\"2\",\"2\",\"1\"]}\n");
    }
}
