//! `reciprocity` command-line interface.
//!
//! Exit codes: 0 when everything succeeded and every verification passed,
//! 1 when at least one verification failed, 2 for usage, parse and
//! precondition errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use reciprocity_core::verify::{run_suite, second_supplement_failures};
use reciprocity_core::{
    gn, gn_sharp, legendre_euler, parse_poly, reciprocant, resultant, trace_poly, verify_qr_range,
    verify_supplement_range, Error, IntPoly, OddPrime, PairReport, ResultantMethod, SuiteConfig,
    SuiteReport, SupplementReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Barnett,
    Sylvester,
}

impl From<MethodArg> for ResultantMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Barnett => ResultantMethod::Barnett,
            MethodArg::Sylvester => ResultantMethod::Sylvester,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "reciprocity",
    version,
    about = "Resultants, trace polynomials and reciprocants of integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Resultant of two monic polynomials.
    Res {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value = "barnett")]
        method: MethodArg,
    },
    /// Reciprocant of two monic reciprocal polynomials of even degree.
    Rec {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Trace polynomial of a reciprocal polynomial of even degree.
    Trace {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The polynomial 1 + x + ... + x^(n-1), or its trace polynomial.
    Gn {
        n: u64,
        #[arg(long)]
        sharp: bool,
    },
    /// Legendre symbol (a/p) by Euler's criterion.
    Legendre {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        p: u64,
    },
    /// Check quadratic reciprocity for all pairs of distinct odd primes up to MAX.
    VerifyQr {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check the supplementary laws for all odd primes up to MAX.
    VerifySupplement {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run every identity check with a fixed seed.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 97)]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(std::io::Error::other(e))
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn poly_arg(s: &str) -> Result<IntPoly, Failure> {
    parse_poly(s).map_err(|e| Failure::Usage(format!("in `{s}`: {e}")))
}

fn odd_prime_arg(p: u64) -> Result<OddPrime, Failure> {
    Ok(OddPrime::new(p)?)
}

/// `Ok(true)` when every verification passed.
fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Failure> {
    match cmd {
        Command::Res { f, g, method } => {
            let v = resultant(&poly_arg(&f)?, &poly_arg(&g)?, method.into())?;
            writeln!(out, "{v}")?;
        }
        Command::Rec { f, g } => {
            let v = reciprocant(&poly_arg(&f)?, &poly_arg(&g)?)?;
            writeln!(out, "{v}")?;
        }
        Command::Trace { poly } => {
            writeln!(out, "{}", trace_poly(&poly_arg(&poly)?)?)?;
        }
        Command::Gn { n, sharp } => {
            let p = if sharp { gn_sharp(n)? } else { gn(n)? };
            writeln!(out, "{p}")?;
        }
        Command::Legendre { a, p } => {
            writeln!(out, "{}", legendre_euler(a, odd_prime_arg(p)?)?)?;
        }
        Command::VerifyQr { max, format, jobs } => {
            let reports = verify_qr_range(max, jobs)?;
            let ok = reports.iter().all(PairReport::passed);
            write_pairs(out, format, &reports)?;
            if !ok && format != OutputFormat::Text {
                for r in reports.iter().filter(|r| !r.passed()) {
                    writeln!(err, "FAIL {r:?}")?;
                }
            }
            return Ok(ok);
        }
        Command::VerifySupplement { max, format, jobs } => {
            let reports = verify_supplement_range(max, jobs)?;
            let ok = reports.iter().all(SupplementReport::passed);
            write_supplement(out, format, &reports)?;
            if !ok && format != OutputFormat::Text {
                for r in reports.iter().filter(|r| !r.passed()) {
                    writeln!(err, "FAIL {r:?}")?;
                }
            }
            let bad = second_supplement_failures(max)?;
            for p in &bad {
                writeln!(err, "FAIL (2/{p}) differs from (-1)^((p^2-1)/8)")?;
            }
            return Ok(ok && bad.is_empty());
        }
        Command::Suite {
            seed,
            trials,
            max,
            format,
            jobs,
        } => {
            let config = SuiteConfig {
                seed,
                trials,
                prime_cap: max,
                jobs,
                ..SuiteConfig::default()
            };
            let report = run_suite(&config)?;
            write_suite(out, err, format, &report)?;
            return Ok(report.all_passed);
        }
    }
    Ok(true)
}

fn write_csv<T: Serialize>(
    out: &mut dyn Write,
    rows: &[T],
    header: &[&str],
) -> Result<(), Failure> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

const PAIR_COLUMNS: [&str; 9] = [
    "p",
    "q",
    "rec_pq",
    "rec_qp",
    "legendre_qp",
    "legendre_pq",
    "res",
    "product_law_ok",
    "congruence_ok",
];

const SUPPLEMENT_COLUMNS: [&str; 8] = [
    "p",
    "rec_phi4",
    "legendre_minus2",
    "legendre_2",
    "mod8_class",
    "pattern_ok",
    "thm_b_ok",
    "congruence_ok",
];

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn write_pairs(
    out: &mut dyn Write,
    format: OutputFormat,
    reports: &[PairReport],
) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, reports)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => write_csv(out, reports, &PAIR_COLUMNS)?,
        OutputFormat::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{:>4} p={} q={}  Rec(g_p,g_q)={} (q/p)={}  Rec(g_q,g_p)={} (p/q)={}  Res={}  product={}",
                    status(r.passed()),
                    r.p,
                    r.q,
                    r.rec_pq,
                    r.legendre_qp,
                    r.rec_qp,
                    r.legendre_pq,
                    r.res_value,
                    r.expected_product()
                )?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} pairs passed", reports.len())?;
        }
    }
    Ok(())
}

fn write_supplement(
    out: &mut dyn Write,
    format: OutputFormat,
    reports: &[SupplementReport],
) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, reports)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => write_csv(out, reports, &SUPPLEMENT_COLUMNS)?,
        OutputFormat::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{:>4} p={} (mod 8: {})  Rec(Phi4,g_p)={} (-2/p)={} (2/p)={}",
                    status(r.passed()),
                    r.p,
                    r.mod8_class,
                    r.rec_phi4,
                    r.legendre_minus2,
                    r.legendre_2
                )?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} primes passed", reports.len())?;
        }
    }
    Ok(())
}

fn write_suite(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: OutputFormat,
    report: &SuiteReport,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            write_csv(
                out,
                &report.identities,
                &["identity", "checked", "passed", "failed"],
            )?;
            for w in &report.witnesses {
                writeln!(
                    err,
                    "FAIL {}[{}]: {} | {} != {}",
                    w.identity.name(),
                    w.index,
                    w.inputs,
                    w.lhs,
                    w.rhs
                )?;
            }
        }
        OutputFormat::Text => {
            let c = &report.config;
            writeln!(
                out,
                "seed={} trials={} degree_cap={} coeff_cap={} prime_cap={}",
                c.seed, c.trials, c.degree_cap, c.coeff_cap, c.prime_cap
            )?;
            for t in &report.identities {
                writeln!(
                    out,
                    "{:>4} {:<22} {}/{}",
                    status(t.failed == 0),
                    t.identity.name(),
                    t.passed,
                    t.checked
                )?;
            }
            for w in &report.witnesses {
                writeln!(
                    out,
                    "witness {}[{}]: {}",
                    w.identity.name(),
                    w.index,
                    w.inputs
                )?;
                writeln!(out, "    lhs: {}", w.lhs)?;
                writeln!(out, "    rhs: {}", w.rhs)?;
            }
            writeln!(
                out,
                "{}",
                if report.all_passed {
                    "all identities passed"
                } else {
                    "FAILURES"
                }
            )?;
        }
    }
    Ok(())
}
