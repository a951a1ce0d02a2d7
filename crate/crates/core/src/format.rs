//! Rendering and parsing of polynomials in the supported output formats.
//!
//! * text: descending powers, explicit rational coefficients, `16/81*x^5 - 20/9*x^3 + 5*x`
//! * json: ascending `[num, den]` decimal-string pairs
//! * csv: `k,h,n` followed by ascending `num/den` cells
//! * latex: `{16\over 81}x^{5}-{20\over 9}x^{3}+5x`

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ratpoly::{Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Latex,
}

/// How exponents of `u = q^{1/2}` are displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaurentVar {
    /// Raw exponents of `u`.
    U,
    /// Powers of `q`, halving the exponent.
    Q,
}

/// Joins signed terms as `a - b + c`, given `(negative, magnitude)` pairs.
fn join_signed(terms: impl IntoIterator<Item = (bool, String)>, spaced: bool) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg, spaced) {
            (0, true, _) => out.push('-'),
            (0, false, _) => {}
            (_, true, true) => out.push_str(" - "),
            (_, false, true) => out.push_str(" + "),
            (_, true, false) => out.push('-'),
            (_, false, false) => out.push('+'),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `|c|*var` with a unit coefficient elided.
fn text_term(c: &Rational, var: Option<String>) -> String {
    let mag = c.abs();
    match var {
        None => mag.to_string(),
        Some(v) if mag.is_one() => v,
        Some(v) => format!("{mag}*{v}"),
    }
}

pub fn render_text(p: &Polynomial, var: &str) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let v = match i {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{i}")),
            };
            (c.is_negative(), text_term(c, v))
        });
    join_signed(terms, true)
}

fn q_power_text(e: i64) -> Option<String> {
    if e % 2 == 0 {
        match e / 2 {
            0 => None,
            1 => Some("q".into()),
            p => Some(format!("q^{p}")),
        }
    } else {
        Some(format!("q^{{{e}/2}}"))
    }
}

pub fn render_laurent_text(p: &LaurentPoly, var: LaurentVar) -> String {
    let terms = p.terms().rev().map(|(e, c)| {
        let v = match var {
            LaurentVar::Q => q_power_text(e),
            LaurentVar::U => match e {
                0 => None,
                1 => Some("u".into()),
                _ => Some(format!("u^{e}")),
            },
        };
        (c.is_negative(), text_term(c, v))
    });
    join_signed(terms, true)
}

fn latex_coeff(mag: &Rational, has_var: bool) -> String {
    if mag.is_integer() {
        if has_var && mag.is_one() {
            String::new()
        } else {
            mag.to_string()
        }
    } else {
        format!("{{{}\\over {}}}", mag.numer(), mag.denom())
    }
}

pub fn render_latex(p: &Polynomial, var: &str) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let v = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{{{i}}}"),
            };
            (c.is_negative(), latex_coeff(&c.abs(), i > 0) + &v)
        });
    join_signed(terms, false)
}

fn q_power_latex(e: i64) -> String {
    match (e % 2 == 0, e < 0) {
        (true, _) if e == 2 => "q".into(),
        (true, _) => format!("q^{{{}}}", e / 2),
        (false, false) => format!("q^{{{}\\over 2}}", e),
        (false, true) => format!("q^{{-{{{}\\over 2}}}}", -e),
    }
}

pub fn render_laurent_latex(p: &LaurentPoly) -> String {
    let terms = p.terms().rev().map(|(e, c)| {
        let v = if e == 0 { String::new() } else { q_power_latex(e) };
        (c.is_negative(), latex_coeff(&c.abs(), e != 0) + &v)
    });
    join_signed(terms, false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub var: String,
    pub coeffs: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub var: String,
    pub min_exp: i64,
    pub coeffs: Vec<[String; 2]>,
}

fn rational_pair(c: &Rational) -> [String; 2] {
    [c.numer().to_string(), c.denom().to_string()]
}

fn pair_rational([n, d]: &[String; 2]) -> Result<Rational> {
    let parse = |s: &String| {
        BigInt::from_str(s).map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
    };
    let den = parse(d)?;
    if den == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(parse(n)?, den))
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            var: "x".into(),
            coeffs: p.coeffs().iter().map(rational_pair).collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = Error;
    fn try_from(j: &PolynomialJson) -> Result<Self> {
        let coeffs = j.coeffs.iter().map(pair_rational).collect::<Result<_>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(p: &LaurentPoly) -> Self {
        LaurentJson {
            var: "u".into(),
            min_exp: p.min_exp(),
            coeffs: p.coeffs().iter().map(rational_pair).collect(),
        }
    }
}

impl TryFrom<&LaurentJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: &LaurentJson) -> Result<Self> {
        let coeffs = j.coeffs.iter().map(pair_rational).collect::<Result<_>>()?;
        Ok(LaurentPoly::new(j.min_exp, coeffs))
    }
}

pub fn render_json(p: &Polynomial) -> String {
    serde_json::to_string(&PolynomialJson::from(p)).expect("serializable")
}

pub fn parse_json(s: &str) -> Result<Polynomial> {
    let j: PolynomialJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Polynomial::try_from(&j)
}

pub fn render_laurent_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&LaurentJson::from(p)).expect("serializable")
}

pub fn parse_laurent_json(s: &str) -> Result<LaurentPoly> {
    let j: LaurentJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    LaurentPoly::try_from(&j)
}

/// One row of a polynomial table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub k: u32,
    pub h: u32,
    pub n: u32,
    pub poly: Polynomial,
}

/// CSV with header `k,h,n,c0,...,cD`; shorter rows are padded with `0`.
pub fn render_csv(rows: &[TableRow]) -> String {
    let width = rows.iter().map(|r| r.poly.coeffs().len()).max().unwrap_or(0).max(1);
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = ["k", "h", "n"]
        .into_iter()
        .map(String::from)
        .chain((0..width).map(|i| format!("c{i}")));
    w.write_record(header).expect("in-memory write");
    for row in rows {
        let cells = [row.k.to_string(), row.h.to_string(), row.n.to_string()]
            .into_iter()
            .chain((0..width).map(|i| row.poly.coeff(i).to_string()));
        w.write_record(cells).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flushed")).expect("utf-8")
}

pub fn parse_csv(s: &str) -> Result<Vec<TableRow>> {
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let parse_u32 = |t: &str| {
        t.parse::<u32>()
            .map_err(|_| Error::Parse(format!("invalid index {t:?}")))
    };
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            if rec.len() < 3 {
                return Err(Error::Parse("row shorter than k,h,n".into()));
            }
            let coeffs = rec.iter().skip(3).map(Rational::from_str).collect::<Result<_>>()?;
            Ok(TableRow {
                k: parse_u32(&rec[0])?,
                h: parse_u32(&rec[1])?,
                n: parse_u32(&rec[2])?,
                poly: Polynomial::new(coeffs),
            })
        })
        .collect()
}

/// `T^{(k,h)}_{n}=...` lines joined by `\\`, mirroring typeset tables.
pub fn render_latex_table(rows: &[TableRow]) -> String {
    let mut out = String::from("\\begin{array}{l}\n");
    for (i, row) in rows.iter().enumerate() {
        let sep = if i + 1 < rows.len() { ",\\\\" } else { "." };
        let _ = writeln!(
            out,
            "T^{{({},{})}}_{{{}}}={}{}",
            row.k,
            row.h,
            row.n,
            render_latex(&row.poly, "x"),
            sep
        );
    }
    out.push_str("\\end{array}");
    out
}
