//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error,
//! 3 domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::alexander::{torus_alexander, torus_n2, TorusParams};
use crate::chebgen::{cheb_recurrence, seeds, ChebParams, Family};
use crate::error::Error;
use crate::format::{
    render_csv, render_json, render_latex, render_latex_table, render_laurent_json,
    render_laurent_latex, render_laurent_text, render_text, LaurentVar, OutputFormat,
    PolynomialJson, TableRow,
};
use crate::report::VerificationReport;
use crate::verify::{self, Ranges, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "chebknot", version, about = "Generalized Chebyshev polynomials and torus-knot Alexander invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print T^(k,h)_n.
    Gen(GenArgs),
    /// Print T^(k,h)_n over ranges of k and h, for n = 0..=n-max.
    Table(TableArgs),
    /// Print the Alexander invariant of the torus knot or link T(n, l).
    Alexander(AlexanderArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    h: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// `a`, `a..b` or `a..=b` (inclusive either way).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    h: String,
    #[arg(long, allow_negative_numbers = true)]
    n_max: i64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct AlexanderArgs {
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// Second torus parameter; omitted means 2 with knot/link dispatch on n.
    #[arg(long, allow_negative_numbers = true)]
    l: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 10)]
    k_max: u32,
    #[arg(long, default_value_t = 10)]
    h_max: u32,
    #[arg(long, default_value_t = 50)]
    n_max: u32,
    /// Angle samples per polynomial for the trig suite.
    #[arg(long, default_value_t = verify::DEFAULT_TRIG_SAMPLES)]
    samples: u32,
    /// Print the recurrence seeds (A, B) for each (k, h) before scanning.
    #[arg(long)]
    seed_check: bool,
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

/// A failed command: exit code plus message for stderr.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) | Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

/// Parses `args` (including the program name), writes results to `out`
/// and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Alexander(a) => cmd_alexander(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            if code == EXIT_USAGE {
                let _ = writeln!(err, "\nFor more information, try '--help'.");
            }
            code
        }
    }
}

fn positive_u32(name: &str, v: i64) -> Result<u32, Failure> {
    u32::try_from(v)
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| usage(format!("--{name} must be a positive integer, got {v}")))
}

fn nonneg_u32(name: &str, v: i64) -> Result<u32, Failure> {
    u32::try_from(v).map_err(|_| usage(format!("--{name} must be a nonnegative integer, got {v}")))
}

fn io(e: std::io::Error) -> Failure {
    Failure(EXIT_DOMAIN, format!("write failed: {e}"))
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (k, h, n) = (positive_u32("k", a.k)?, positive_u32("h", a.h)?, nonneg_u32("n", a.n)?);
    let poly = cheb_recurrence(ChebParams::new(k, h, n)?);
    let text = match a.format {
        OutputFormat::Text => render_text(&poly, "x"),
        OutputFormat::Json => render_json(&poly),
        OutputFormat::Csv => render_csv(&[TableRow { k, h, n, poly }]).trim_end().to_string(),
        OutputFormat::Latex => format!("T^{{({k},{h})}}_{{{n}}}={}", render_latex(&poly, "x")),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn parse_range(name: &str, s: &str) -> Result<(u32, u32), Failure> {
    let bad = || usage(format!("--{name}: invalid range {s:?} (expected a, a..b or a..=b)"));
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        None => {
            let v = num(s)?;
            (v, v)
        }
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
    };
    if lo > hi {
        return Err(usage(format!("--{name}: empty range {s:?}")));
    }
    Ok((positive_u32(name, lo)?, positive_u32(name, hi)?))
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (k_lo, k_hi) = parse_range("k", &a.k)?;
    let (h_lo, h_hi) = parse_range("h", &a.h)?;
    let n_max = nonneg_u32("n-max", a.n_max)?;
    let mut rows = Vec::new();
    for k in k_lo..=k_hi {
        for h in h_lo..=h_hi {
            let fam = Family::new(k, h)?;
            for (n, poly) in fam.sequence().take(n_max as usize + 1).enumerate() {
                rows.push(TableRow { k, h, n: n as u32, poly });
            }
        }
    }
    let text = match a.format {
        OutputFormat::Text => rows
            .iter()
            .map(|r| format!("T^({},{})_{} = {}", r.k, r.h, r.n, render_text(&r.poly, "x")))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|r| json!({"k": r.k, "h": r.h, "n": r.n, "poly": PolynomialJson::from(&r.poly)}))
                .collect();
            serde_json::to_string(&items).expect("serializable")
        }
        OutputFormat::Csv => render_csv(&rows).trim_end().to_string(),
        OutputFormat::Latex => render_latex_table(&rows),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_alexander(a: AlexanderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let n = positive_u32("n", a.n)? as u64;
    let delta = match a.l {
        None => torus_n2(n)?,
        Some(l) => {
            let l = positive_u32("l", l)? as u64;
            torus_alexander(TorusParams::new(n, l)?)?
        }
    };
    let text = match a.format {
        OutputFormat::Text => render_laurent_text(&delta, LaurentVar::Q),
        OutputFormat::Json => render_laurent_json(&delta),
        OutputFormat::Latex => render_laurent_latex(&delta),
        OutputFormat::Csv => {
            let mut s = String::from("u_exp,coeff");
            for (e, c) in delta.terms().rev() {
                s.push_str(&format!("\n{e},{c}"));
            }
            s
        }
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn render_report_text(r: &VerificationReport) -> String {
    let ranges = r
        .ranges
        .iter()
        .map(|p| format!("{}={}..{}", p.name, p.lo, p.hi))
        .collect::<Vec<_>>()
        .join(" ");
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut s = format!("{status} {} [{ranges}] failures={}", r.identity, r.failures.len());
    if let Some(d) = r.max_deviation {
        s.push_str(&format!(" max_deviation={d:.3e}"));
    }
    for f in &r.failures {
        let params = f
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        s.push_str(&format!("\n  {params}\n    lhs: {}\n    rhs: {}", f.lhs, f.rhs));
    }
    s
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if matches!(a.format, OutputFormat::Csv | OutputFormat::Latex) {
        return Err(usage("verify supports --format text or json"));
    }
    let ranges = Ranges {
        k_max: a.k_max,
        h_max: a.h_max,
        n_max: a.n_max,
        samples: a.samples,
    };
    let seed_rows: Vec<(u32, u32, String, String)> = if a.seed_check {
        (1..=a.k_max)
            .flat_map(|k| (1..=a.h_max).map(move |h| (k, h)))
            .filter_map(|(k, h)| Family::new(k, h).ok())
            .map(|f| {
                let s = seeds(f);
                (f.k(), f.h(), s.a.to_string(), s.b.to_string())
            })
            .collect()
    } else {
        Vec::new()
    };
    if a.format == OutputFormat::Text {
        for (k, h, sa, sb) in &seed_rows {
            writeln!(out, "seed k={k} h={h} A={sa} B={sb}").map_err(io)?;
        }
    }

    let reports = match a.jobs {
        Some(0) => return Err(usage("--jobs must be at least 1")),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure(EXIT_DOMAIN, e.to_string()))?
            .install(|| verify::run(a.suite, &ranges))?,
        None => verify::run(a.suite, &ranges)?,
    };
    let passed = reports.iter().all(VerificationReport::passed);

    for r in &reports {
        let _ = writeln!(err, "{}: {} ms", r.identity, r.elapsed.as_millis());
    }
    match a.format {
        OutputFormat::Json => {
            let mut doc = json!({"passed": passed, "reports": reports});
            if a.seed_check {
                doc["seeds"] = seed_rows
                    .iter()
                    .map(|(k, h, sa, sb)| json!({"k": k, "h": h, "A": sa, "B": sb}))
                    .collect();
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                .map_err(io)?;
        }
        _ => {
            for r in &reports {
                writeln!(out, "{}", render_report_text(r)).map_err(io)?;
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
