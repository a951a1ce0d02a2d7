//! Generalized equidistant Chebyshev polynomials `T^(k,h)_n`.
//!
//! `k` is the kind and `h` the hyperkind. `(1, 1)` and `(2, 1)` are the
//! classical first- and second-kind polynomials, `(1, 2)` and `(2, 2)` their
//! monic versions. Every member satisfies
//!
//! ```text
//! T_{n+1} = (2/h) x T_n - T_{n-1},   T_0 = A,   T_1 = B x
//! A = (k-1) - (k-2) h,               B = (k-1) (2/h) - (k-2)
//! ```
//!
//! and equals `alpha V_n + beta V_{n-2}` in the second-kind basis
//! `V_n = T^(2,h)_n`, with `alpha = (k-1) - (k-2) h/2`, `beta = (k-2) h/2`.

use std::f64::consts::PI;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::format::render_text;
use crate::ratpoly::{Polynomial, Rational};
use crate::report::{Case, VerificationReport};

/// A `(kind, hyperkind)` pair, both at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    k: u32,
    h: u32,
}

impl Family {
    pub fn new(k: u32, h: u32) -> Result<Self> {
        if k == 0 || h == 0 {
            return Err(Error::InvalidParams(format!(
                "kind and hyperkind must be positive (k = {k}, h = {h})"
            )));
        }
        Ok(Family { k, h })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn h(self) -> u32 {
        self.h
    }

    /// `T_0, T_1, T_2, ...` of this family.
    pub fn sequence(self) -> ChebSequence {
        let SeedPair { a, b } = seeds(self);
        ChebSequence::new(self.h, Polynomial::constant(a), Polynomial::monomial(b, 1))
    }
}

/// Selects `T^(k,h)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChebParams {
    family: Family,
    n: u32,
}

impl ChebParams {
    pub fn new(k: u32, h: u32, n: u32) -> Result<Self> {
        Ok(ChebParams {
            family: Family::new(k, h)?,
            n,
        })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn k(self) -> u32 {
        self.family.k
    }

    pub fn h(self) -> u32 {
        self.family.h
    }

    pub fn n(self) -> u32 {
        self.n
    }
}

/// Initial values of the recurrence: `T_0 = a`, `T_1 = b x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedPair {
    pub a: Rational,
    pub b: Rational,
}

/// Weights of `sin((n+1)t)/sin t` and `sin((n-1)t)/sin t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistantCoeffs {
    pub alpha: Rational,
    pub beta: Rational,
}

fn int(v: u32) -> Rational {
    Rational::from(v)
}

fn signed(v: i64) -> Rational {
    Rational::from(v)
}

/// `2/h`, the factor multiplying `x` in every recurrence step.
pub fn step_factor(h: u32) -> Rational {
    Rational::new(2, h)
}

pub fn seeds(family: Family) -> SeedPair {
    let (k, h) = (family.k as i64, family.h);
    let a = signed(k - 1) - signed(k - 2) * int(h);
    let b = signed(k - 1) * step_factor(h) - signed(k - 2);
    SeedPair { a, b }
}

pub fn equidistant_coefficients(family: Family) -> EquidistantCoeffs {
    let (k, h) = (family.k as i64, family.h);
    let half_h = Rational::new(h, 2);
    let beta = signed(k - 2) * &half_h;
    let alpha = signed(k - 1) - &beta;
    EquidistantCoeffs { alpha, beta }
}

/// Rolling two-term generator for `P_{n+1} = (2/h) x P_n - P_{n-1}`.
#[derive(Debug, Clone)]
pub struct ChebSequence {
    step: Rational,
    prev: Polynomial,
    cur: Polynomial,
}

impl ChebSequence {
    fn new(h: u32, first: Polynomial, second: Polynomial) -> Self {
        ChebSequence {
            step: step_factor(h),
            prev: first,
            cur: second,
        }
    }
}

impl Iterator for ChebSequence {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let next = &self.cur.shift(1).scale(&self.step) - &self.prev;
        let out = std::mem::replace(&mut self.prev, std::mem::replace(&mut self.cur, next));
        Some(out)
    }
}

/// `T^(k,h)_n` from the three-term recurrence.
pub fn cheb_recurrence(p: ChebParams) -> Polynomial {
    p.family()
        .sequence()
        .nth(p.n as usize)
        .expect("sequence is infinite")
}

/// `V^(h)_n` for `n >= -2` (`V_{-2} = -1`, `V_{-1} = 0`, `V_0 = 1`).
pub fn second_kind_basis(h: u32, n: i64) -> Result<Polynomial> {
    if n < -2 {
        return Err(Error::IndexOutOfRange(n));
    }
    if h == 0 {
        return Err(Error::InvalidParams("hyperkind must be positive".into()));
    }
    Ok(SecondKindTable::new(h, n.max(0) as u32).get(n))
}

/// `V^(h)_{-2} ..= V^(h)_{n_max}` computed once.
#[derive(Debug, Clone)]
pub struct SecondKindTable {
    polys: Vec<Polynomial>,
}

impl SecondKindTable {
    pub fn new(h: u32, n_max: u32) -> Self {
        let seq = ChebSequence::new(h, -Polynomial::one(), Polynomial::zero());
        SecondKindTable {
            polys: seq.take(n_max as usize + 3).collect(),
        }
    }

    /// Panics outside `-2..=n_max`.
    pub fn get(&self, n: i64) -> Polynomial {
        self.polys[(n + 2) as usize].clone()
    }

    fn at(&self, n: i64) -> &Polynomial {
        &self.polys[(n + 2) as usize]
    }
}

fn closed_form_from(coeffs: &EquidistantCoeffs, basis: &SecondKindTable, n: u32) -> Polynomial {
    let n = n as i64;
    &basis.at(n).scale(&coeffs.alpha) + &basis.at(n - 2).scale(&coeffs.beta)
}

/// `alpha V_n + beta V_{n-2}`.
pub fn cheb_closed_form(p: ChebParams) -> Polynomial {
    let basis = SecondKindTable::new(p.h(), p.n);
    closed_form_from(&equidistant_coefficients(p.family()), &basis, p.n)
}

fn linear_combination_from(k: u32, second: &Polynomial, first: &Polynomial) -> Polynomial {
    let k = k as i64;
    &second.scale(&signed(k - 1)) - &first.scale(&signed(k - 2))
}

/// `(k-1) T^(2,h)_n - (k-2) T^(1,h)_n`.
pub fn linear_combination_form(p: ChebParams) -> Polynomial {
    let second = cheb_recurrence(ChebParams::new(2, p.h(), p.n).expect("valid"));
    let first = cheb_recurrence(ChebParams::new(1, p.h(), p.n).expect("valid"));
    linear_combination_from(p.k(), &second, &first)
}

/// `T^(k+1,h)_n - T^(k,h)_n`.
pub fn equidistance_delta(p: ChebParams) -> Polynomial {
    let next = ChebParams::new(p.k() + 1, p.h(), p.n).expect("valid");
    &cheb_recurrence(next) - &cheb_recurrence(p)
}

fn connection_case(h: u32, n: u32, first: &Polynomial, basis: &SecondKindTable) -> Option<Case> {
    let lhs = first.scale(&int(2));
    let rhs = (basis.at(n as i64) - basis.at(n as i64 - 2)).scale(&int(h));
    (lhs != rhs).then(|| {
        Case::new(
            &[("h", h as i64), ("n", n as i64)],
            render_text(&lhs, "x"),
            render_text(&rhs, "x"),
        )
    })
}

/// Checks `2 T^(1,h)_n = h (V_n - V_{n-2})` for one `(h, n)`.
pub fn connection_first_second(h: u32, n: u32) -> Result<VerificationReport> {
    let started = Instant::now();
    let first = cheb_recurrence(ChebParams::new(1, h, n)?);
    let basis = SecondKindTable::new(h, n);
    let mut report = VerificationReport::new("connection")
        .with_range("h", h as i64, h as i64)
        .with_range("n", n as i64, n as i64);
    if let Some(case) = connection_case(h, n, &first, &basis) {
        report.fail(case);
    }
    Ok(report.finish(started))
}

/// Maximum of `|T^(k,h)_n(h cos t) - (alpha sin((n+1)t) + beta sin((n-1)t)) / sin t|`
/// over `samples` evenly spaced `t` strictly inside `(0.1, pi - 0.1)`.
pub fn trig_crosscheck(p: ChebParams, samples: u32) -> f64 {
    let poly = cheb_recurrence(p);
    trig_deviation(&poly, p, samples)
}

fn trig_deviation(poly: &Polynomial, p: ChebParams, samples: u32) -> f64 {
    let EquidistantCoeffs { alpha, beta } = equidistant_coefficients(p.family());
    let (alpha, beta) = (alpha.to_f64(), beta.to_f64());
    let (h, n) = (p.h() as f64, p.n as f64);
    let coeffs: Vec<(f64, f64)> = poly.coeffs().iter().map(Rational::to_f64_pair).collect();
    let span = PI - 0.2;
    (1..=samples)
        .map(|i| {
            let t = 0.1 + span * i as f64 / (samples as f64 + 1.0);
            let value = crate::ratpoly::compensated_eval(&coeffs, h * t.cos());
            let expected = (alpha * ((n + 1.0) * t).sin() + beta * ((n - 1.0) * t).sin()) / t.sin();
            (value - expected).abs()
        })
        .fold(0.0, f64::max)
}

pub(crate) mod scan {
    //! Batch checks over `(k, h, n)` boxes, sharing sequences per family.

    use rayon::prelude::*;

    use super::*;

    fn families(k_max: u32, h_max: u32) -> Vec<Family> {
        (1..=h_max)
            .flat_map(|h| (1..=k_max).map(move |k| Family { k, h }))
            .collect()
    }

    /// Recurrence, closed form and linear combination agree.
    pub fn constructions(k_max: u32, h_max: u32, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let mut report = VerificationReport::new("recurrence-vs-closed")
            .with_range("k", 1, k_max as i64)
            .with_range("h", 1, h_max as i64)
            .with_range("n", 0, n_max as i64);
        let len = n_max as usize + 1;
        let parts: Vec<VerificationReport> = (1..=h_max)
            .into_par_iter()
            .map(|h| {
                let mut part = VerificationReport::new("recurrence-vs-closed");
                let basis = SecondKindTable::new(h, n_max);
                let first: Vec<_> = Family { k: 1, h }.sequence().take(len).collect();
                let second: Vec<_> = Family { k: 2, h }.sequence().take(len).collect();
                for k in 1..=k_max {
                    let fam = Family { k, h };
                    let coeffs = equidistant_coefficients(fam);
                    for (n, rec) in fam.sequence().take(len).enumerate() {
                        let closed = closed_form_from(&coeffs, &basis, n as u32);
                        let lin = linear_combination_from(k, &second[n], &first[n]);
                        let params = [("k", k as i64), ("h", h as i64), ("n", n as i64)];
                        if rec != closed {
                            part.fail(Case::new(&params, render_text(&rec, "x"), render_text(&closed, "x")));
                        }
                        if rec != lin {
                            part.fail(Case::new(&params, render_text(&rec, "x"), render_text(&lin, "x")));
                        }
                    }
                }
                part
            })
            .collect();
        parts.into_iter().for_each(|p| report.absorb(p));
        report.finish(started)
    }

    /// `T^(k+1,h)_n - T^(k,h)_n` is the same polynomial for every `k`.
    pub fn equidistance(k_max: u32, h_max: u32, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let mut report = VerificationReport::new("equidistance")
            .with_range("k", 1, k_max as i64)
            .with_range("h", 1, h_max as i64)
            .with_range("n", 0, n_max as i64);
        let len = n_max as usize + 1;
        let parts: Vec<VerificationReport> = (1..=h_max)
            .into_par_iter()
            .map(|h| {
                let mut part = VerificationReport::new("equidistance");
                let rows: Vec<Vec<Polynomial>> = (1..=k_max + 1)
                    .map(|k| Family { k, h }.sequence().take(len).collect())
                    .collect();
                for n in 0..len {
                    let reference = &rows[1][n] - &rows[0][n];
                    for k in 2..=k_max as usize {
                        let delta = &rows[k][n] - &rows[k - 1][n];
                        if delta != reference {
                            part.fail(Case::new(
                                &[("k", k as i64), ("h", h as i64), ("n", n as i64)],
                                render_text(&delta, "x"),
                                render_text(&reference, "x"),
                            ));
                        }
                    }
                }
                part
            })
            .collect();
        parts.into_iter().for_each(|p| report.absorb(p));
        report.finish(started)
    }

    pub fn connection(h_max: u32, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let mut report = VerificationReport::new("connection")
            .with_range("h", 1, h_max as i64)
            .with_range("n", 0, n_max as i64);
        let parts: Vec<Vec<Case>> = (1..=h_max)
            .into_par_iter()
            .map(|h| {
                let basis = SecondKindTable::new(h, n_max);
                Family { k: 1, h }
                    .sequence()
                    .take(n_max as usize + 1)
                    .enumerate()
                    .filter_map(|(n, first)| connection_case(h, n as u32, &first, &basis))
                    .collect()
            })
            .collect();
        parts.into_iter().flatten().for_each(|c| report.fail(c));
        report.finish(started)
    }

    pub fn trig(
        k_max: u32,
        h_max: u32,
        n_lo: u32,
        n_max: u32,
        samples: u32,
        tolerance: f64,
    ) -> VerificationReport {
        let started = Instant::now();
        let mut report = VerificationReport::new("trig")
            .with_range("k", 1, k_max as i64)
            .with_range("h", 1, h_max as i64)
            .with_range("n", n_lo as i64, n_max as i64)
            .with_range("samples", samples as i64, samples as i64);
        let parts: Vec<VerificationReport> = families(k_max, h_max)
            .into_par_iter()
            .map(|fam| {
                let mut part = VerificationReport::new("trig");
                for (n, poly) in fam.sequence().take(n_max as usize + 1).enumerate().skip(n_lo as usize) {
                    let p = ChebParams { family: fam, n: n as u32 };
                    let dev = trig_deviation(&poly, p, samples);
                    part.record_deviation(dev);
                    if !(dev < tolerance) {
                        part.fail(Case::new(
                            &[("k", fam.k as i64), ("h", fam.h as i64), ("n", n as i64)],
                            format!("max deviation {dev:e}"),
                            format!("tolerance {tolerance:e}"),
                        ));
                    }
                }
                part
            })
            .collect();
        parts.into_iter().for_each(|p| report.absorb(p));
        report.finish(started)
    }
}
