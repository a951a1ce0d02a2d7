//! The substitution `x = (h/2)(u + 1/u)`, `u = q^{1/2}`, linking
//! first- and second-kind polynomials of hyperkind `h` to the `T(n, 2)`
//! Alexander invariants.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::alexander::{torus_knot_n2, torus_link_n2};
use crate::chebgen::{cheb_recurrence, ChebParams, Family};
use crate::error::{Error, Result};
use crate::format::{render_laurent_text, render_text, LaurentVar};
use crate::laurent::LaurentPoly;
use crate::ratpoly::{Polynomial, Rational};
use crate::report::{Case, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubstitutionContext {
    h: u32,
}

impl SubstitutionContext {
    pub fn new(h: u32) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidParams("hyperkind must be positive".into()));
        }
        Ok(SubstitutionContext { h })
    }

    pub fn h(self) -> u32 {
        self.h
    }

    /// Image of `x`: `(h/2)(u + 1/u)`.
    pub fn image_of_x(self) -> LaurentPoly {
        LaurentPoly::u_plus_inverse(1).scale(&Rational::new(self.h, 2))
    }
}

fn odd(n: u64) -> Result<u32> {
    if n % 2 == 0 {
        return Err(Error::NotOdd(n));
    }
    u32::try_from(n).map_err(|_| Error::InvalidParams(format!("n = {n} is too large")))
}

fn cheb(k: u32, h: u32, n: u32) -> Result<Polynomial> {
    Ok(cheb_recurrence(ChebParams::new(k, h, n)?))
}

/// Image of `p` under `x -> (h/2)(u + 1/u)`.
///
/// Computes `p((h/2) y)`, clears denominators, then runs Horner in
/// `y = u + 1/u` over integers, where multiplying by `y` is a shift-add.
pub fn substitute_x(p: &Polynomial, ctx: SubstitutionContext) -> LaurentPoly {
    let Some(deg) = p.degree().finite() else {
        return LaurentPoly::zero();
    };
    let scaled = p.rescale_argument(&Rational::new(ctx.h, 2));
    let denom = scaled
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = scaled
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom / c.denom()))
        .collect();
    // acc[deg + e] holds the coefficient of u^e.
    let width = 2 * deg + 1;
    let mut acc = vec![BigInt::zero(); width];
    let mut next = vec![BigInt::zero(); width];
    for (step, c) in ints.iter().rev().enumerate() {
        if step > 0 {
            for j in 0..width {
                let below = if j > 0 { Some(&acc[j - 1]) } else { None };
                let above = acc.get(j + 1);
                next[j] = match (below, above) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => BigInt::zero(),
                };
            }
            std::mem::swap(&mut acc, &mut next);
        }
        acc[deg] += c;
    }
    let coeffs = acc
        .into_iter()
        .map(|a| Rational::new(a, denom.clone()))
        .collect();
    LaurentPoly::new(-(deg as i64), coeffs)
}

fn t1h_sides(n: u32, ctx: SubstitutionContext, delta: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    let lhs = substitute_x(&cheb(1, ctx.h, n)?, ctx);
    let rhs = &ctx.image_of_x() * delta;
    Ok((lhs, rhs))
}

/// `(u + 1/u) * (D^L_{n+1,2} / (u - 1/u))`, the image of `(2x/h) D / (q^{1/2} - q^{-1/2})`.
fn t2h_rhs(link: &LaurentPoly) -> Result<LaurentPoly> {
    Ok(LaurentPoly::u_plus_inverse(1) * link.div_exact(&LaurentPoly::u_minus_inverse(1))?)
}

fn case(n: u32, h: u32, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Case {
    Case::new(
        &[("n", n as i64), ("h", h as i64)],
        render_laurent_text(lhs, LaurentVar::Q),
        render_laurent_text(rhs, LaurentVar::Q),
    )
}

/// Checks `T^(1,h)_n(x) = x D^K_{n,2}(q)` under the substitution, `n` odd.
pub fn verify_t1h(n: u64, h: u32) -> Result<VerificationReport> {
    let n = odd(n)?;
    let ctx = SubstitutionContext::new(h)?;
    let started = Instant::now();
    let mut report = VerificationReport::new("bridge-t1h")
        .with_range("n", n as i64, n as i64)
        .with_range("h", h as i64, h as i64);
    let (lhs, rhs) = t1h_sides(n, ctx, &torus_knot_n2(n as u64)?)?;
    if lhs != rhs {
        report.fail(case(n, h, &lhs, &rhs));
    }
    Ok(report.finish(started))
}

/// `substitute_x(T^(1,h)_n) / substitute_x(x)`, which should not depend on `h`.
pub fn t1h_quotient(n: u64, h: u32) -> Result<LaurentPoly> {
    let n = odd(n)?;
    let ctx = SubstitutionContext::new(h)?;
    substitute_x(&cheb(1, h, n)?, ctx).div_exact(&ctx.image_of_x())
}

/// Compares the `t1h` quotient for `h = 1..=h_max` against the `T(n,2)` invariant.
pub fn t1h_h_invariance(n: u64, h_max: u32) -> Result<VerificationReport> {
    let started = Instant::now();
    let n32 = odd(n)?;
    let delta = torus_knot_n2(n)?;
    let mut report = VerificationReport::new("bridge-t1h-h-invariance")
        .with_range("n", n as i64, n as i64)
        .with_range("h", 1, h_max as i64);
    for h in 1..=h_max {
        let quotient = t1h_quotient(n, h)?;
        if quotient != delta {
            report.fail(case(n32, h, &quotient, &delta));
        }
    }
    Ok(report.finish(started))
}

/// Checks `T^(2,h)_n(x) = (2x/h) D^L_{n+1,2}(q) / (q^{1/2} - q^{-1/2})`, `n` odd.
pub fn verify_t2h(n: u64, h: u32) -> Result<VerificationReport> {
    let n = odd(n)?;
    let ctx = SubstitutionContext::new(h)?;
    let started = Instant::now();
    let mut report = VerificationReport::new("bridge-t2h")
        .with_range("n", n as i64, n as i64)
        .with_range("h", h as i64, h as i64);
    let lhs = substitute_x(&cheb(2, h, n)?, ctx);
    let rhs = t2h_rhs(&torus_link_n2(n as u64 + 1)?)?;
    if lhs != rhs {
        report.fail(case(n, h, &lhs, &rhs));
    }
    Ok(report.finish(started))
}

/// Rewrites a `u -> 1/u` symmetric Laurent polynomial as a polynomial in
/// `x`, replacing `u^j + u^-j` by the monic first-kind polynomial
/// `T^(1,2)_j` at `2x/h`.
pub fn inverse_substitute(p: &LaurentPoly, ctx: SubstitutionContext) -> Result<Polynomial> {
    if p.bar() != *p {
        return Err(Error::AsymmetricInput);
    }
    let top = p.max_exp().unwrap_or(0).max(0) as usize;
    let monic = Family::new(1, 2).expect("valid").sequence();
    let mut y_poly = Polynomial::constant(p.coeff(0));
    for (j, basis) in monic.enumerate().take(top + 1).skip(1) {
        let c = p.coeff(j as i64);
        if !c.is_zero() {
            y_poly = &y_poly + &basis.scale(&c);
        }
    }
    Ok(y_poly.rescale_argument(&Rational::new(2, ctx.h)))
}

/// Recovers `T^(1,h)_n` from `x D^K_{n,2}` for odd `n`.
pub fn chebyshev_from_alexander(n: u64, h: u32) -> Result<Polynomial> {
    odd(n)?;
    let ctx = SubstitutionContext::new(h)?;
    let image = &ctx.image_of_x() * &torus_knot_n2(n)?;
    inverse_substitute(&image, ctx)
}

pub(crate) mod scan {
    use super::*;

    fn odd_ns(n_max: u64) -> Vec<u64> {
        (1..=n_max).step_by(2).collect()
    }

    /// `t1h` for odd `n <= n_max`, `h <= h_max`, plus its `h`-invariance.
    /// Even `n` are recorded as observations at `h = 1` only.
    pub fn t1h(n_max: u64, h_max: u32) -> Result<(VerificationReport, VerificationReport)> {
        let started = Instant::now();
        let mut report = VerificationReport::new("bridge-t1h")
            .with_range("n", 1, n_max as i64)
            .with_range("h", 1, h_max as i64);
        let mut invariance = VerificationReport::new("bridge-t1h-h-invariance")
            .with_range("n", 1, n_max as i64)
            .with_range("h", 1, h_max as i64);
        let deltas: Vec<LaurentPoly> = odd_ns(n_max)
            .into_iter()
            .map(torus_knot_n2)
            .collect::<Result<_>>()?;
        let parts: Vec<(Vec<Case>, Vec<Case>)> = (1..=h_max)
            .into_par_iter()
            .map(|h| -> Result<_> {
                let ctx = SubstitutionContext::new(h)?;
                let x = ctx.image_of_x();
                let mut fails = Vec::new();
                let mut inv = Vec::new();
                let seq = Family::new(1, h)?.sequence().take(n_max as usize + 1);
                for (n, poly) in seq.enumerate().skip(1).step_by(2) {
                    let delta = &deltas[n / 2];
                    let lhs = substitute_x(&poly, ctx);
                    let rhs = &x * delta;
                    if lhs != rhs {
                        fails.push(case(n as u32, h, &lhs, &rhs));
                    }
                    let quotient = lhs.div_exact(&x)?;
                    if quotient != *delta {
                        inv.push(case(n as u32, h, &quotient, delta));
                    }
                }
                Ok((fails, inv))
            })
            .collect::<Result<_>>()?;
        for (fails, inv) in parts {
            fails.into_iter().for_each(|c| report.fail(c));
            inv.into_iter().for_each(|c| invariance.fail(c));
        }
        let ctx = SubstitutionContext::new(1)?;
        let seq = Family::new(1, 1)?.sequence().take(n_max as usize + 1);
        for (n, poly) in seq.enumerate().skip(2).step_by(2) {
            let lhs = substitute_x(&poly, ctx);
            let rhs = &ctx.image_of_x() * &torus_link_n2(n as u64)?;
            report.observe(case(n as u32, 1, &lhs, &rhs));
        }
        Ok((report.finish(started), invariance.finish(started)))
    }

    pub fn t2h(n_max: u64, h_max: u32) -> Result<VerificationReport> {
        let started = Instant::now();
        let mut report = VerificationReport::new("bridge-t2h")
            .with_range("n", 1, n_max as i64)
            .with_range("h", 1, h_max as i64);
        let rhss: Vec<LaurentPoly> = odd_ns(n_max)
            .into_iter()
            .map(|n| t2h_rhs(&torus_link_n2(n + 1)?))
            .collect::<Result<_>>()?;
        let parts: Vec<Vec<Case>> = (1..=h_max)
            .into_par_iter()
            .map(|h| -> Result<_> {
                let ctx = SubstitutionContext::new(h)?;
                let seq = Family::new(2, h)?.sequence().take(n_max as usize + 1);
                let mut fails = Vec::new();
                for (n, poly) in seq.enumerate().skip(1).step_by(2) {
                    let lhs = substitute_x(&poly, ctx);
                    let rhs = &rhss[n / 2];
                    if lhs != *rhs {
                        fails.push(case(n as u32, h, &lhs, rhs));
                    }
                }
                Ok(fails)
            })
            .collect::<Result<_>>()?;
        parts.into_iter().flatten().for_each(|c| report.fail(c));
        let ctx = SubstitutionContext::new(1)?;
        let seq = Family::new(2, 1)?.sequence().take(n_max as usize + 1);
        for (n, poly) in seq.enumerate().skip(2).step_by(2) {
            let lhs = substitute_x(&poly, ctx);
            let knot = torus_knot_n2(n as u64 + 1)?;
            let rhs = match knot.div_exact(&LaurentPoly::u_minus_inverse(1)) {
                Ok(q) => render_laurent_text(&(LaurentPoly::u_plus_inverse(1) * q), LaurentVar::Q),
                Err(_) => format!(
                    "(q^{{1/2}} + q^{{-1/2}}) * ({}) / (q^{{1/2}} - q^{{-1/2}}), not a Laurent polynomial",
                    render_laurent_text(&knot, LaurentVar::Q)
                ),
            };
            report.observe(Case::new(
                &[("n", n as i64), ("h", 1)],
                render_laurent_text(&lhs, LaurentVar::Q),
                rhs,
            ));
        }
        Ok(report.finish(started))
    }

    pub fn inverse(n_max: u64, h_max: u32) -> Result<VerificationReport> {
        let started = Instant::now();
        let mut report = VerificationReport::new("inverse-recipe")
            .with_range("n", 1, n_max as i64)
            .with_range("h", 1, h_max as i64);
        let parts: Vec<Vec<Case>> = (1..=h_max)
            .into_par_iter()
            .map(|h| -> Result<_> {
                let seq = Family::new(1, h)?.sequence().take(n_max as usize + 1);
                let mut fails = Vec::new();
                for (n, want) in seq.enumerate().skip(1).step_by(2) {
                    let got = chebyshev_from_alexander(n as u64, h)?;
                    if got != want {
                        fails.push(Case::new(
                            &[("n", n as i64), ("h", h as i64)],
                            render_text(&got, "x"),
                            render_text(&want, "x"),
                        ));
                    }
                }
                Ok(fails)
            })
            .collect::<Result<_>>()?;
        parts.into_iter().flatten().for_each(|c| report.fail(c));
        Ok(report.finish(started))
    }
}
