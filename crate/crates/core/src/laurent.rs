//! Laurent polynomials in `u = q^{1/2}` with rational coefficients.
//!
//! Working in `u` keeps every half-integer power of `q` an integer exponent.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ratpoly::{Polynomial, Rational};

/// Finitely supported series `sum_i coeffs[i] * u^(min_exp + i)`.
///
/// The first and last stored coefficients are nonzero; zero is the empty
/// vector with `min_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.canonicalize();
        p
    }

    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` terms; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// `u^exp` with unit coefficient.
    pub fn u_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `u^e - u^-e`.
    pub fn u_minus_inverse(e: i64) -> Self {
        Self::u_pow(e) - Self::u_pow(-e)
    }

    /// `u^e + u^-e`.
    pub fn u_plus_inverse(e: i64) -> Self {
        Self::u_pow(e) + Self::u_pow(-e)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
    }

    pub fn is_canonical(&self) -> bool {
        match (self.coeffs.first(), self.coeffs.last()) {
            (None, None) => self.min_exp == 0,
            (Some(a), Some(b)) => !a.is_zero() && !b.is_zero(),
            _ => unreachable!(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Exponent of the highest term; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The involution `u -> 1/u`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(max) => Self::new(-max, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Value at a nonzero rational `u`.
    pub fn eval(&self, u: &Rational) -> Option<Rational> {
        let inv = u.recip()?;
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * u + c);
        let shift = if self.min_exp >= 0 {
            u.pow(self.min_exp as u32)
        } else {
            inv.pow((-self.min_exp) as u32)
        };
        Some(body * shift)
    }

    /// Ordinary polynomial `u^-min_exp * self`, which has a nonzero constant term.
    fn shifted(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    /// Returns `c` with `divisor * c == self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both shifted images have a nonzero constant term, so a Laurent
        // quotient exists iff the polynomial division is exact.
        let (q, rem) = self.shifted().div_rem(&divisor.shifted())?;
        if !rem.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::new(self.min_exp - divisor.min_exp, q.into_coeffs()))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})u^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.min_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.min_exp - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::new(lo, out)
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    LaurentPoly::new(a.min_exp + b.min_exp, out)
}

macro_rules! lp_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}
lp_binop!(Add, add, |a, b| add_impl(a, b, false));
lp_binop!(Sub, sub, |a, b| add_impl(a, b, true));
lp_binop!(Mul, mul, mul_impl);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
