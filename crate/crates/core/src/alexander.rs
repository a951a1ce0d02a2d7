//! Alexander invariants of torus knots `T(n, l)` and torus links `T(n, 2)`.
//!
//! All invariants live in the Laurent ring in `u = q^{1/2}`.

use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::{render_laurent_text, LaurentVar};
use crate::laurent::LaurentPoly;
use crate::report::{Case, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusParams {
    n: u64,
    l: u64,
}

impl TorusParams {
    pub fn new(n: u64, l: u64) -> Result<Self> {
        if n == 0 || l == 0 {
            return Err(Error::InvalidParams(format!(
                "torus parameters must be positive (n = {n}, l = {l})"
            )));
        }
        Ok(TorusParams { n, l })
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn l(self) -> u64 {
        self.l
    }

    pub fn gcd(self) -> u64 {
        self.n.gcd(&self.l)
    }
}

fn exp(v: u64) -> i64 {
    i64::try_from(v).expect("exponent fits in i64")
}

/// `(u^{nl} - u^{-nl})(u - u^-1) / ((u^n - u^-n)(u^l - u^-l))` for coprime `n, l`.
pub fn torus_alexander(t: TorusParams) -> Result<LaurentPoly> {
    let gcd = t.gcd();
    if gcd != 1 {
        return Err(Error::NonCoprime { n: t.n, l: t.l, gcd });
    }
    let num = LaurentPoly::u_minus_inverse(exp(t.n * t.l)) * LaurentPoly::u_minus_inverse(1);
    let den = LaurentPoly::u_minus_inverse(exp(t.n)) * LaurentPoly::u_minus_inverse(exp(t.l));
    num.div_exact(&den)
}

/// Knot `T(n, 2)`, `n` odd: `(u^n + u^-n) / (u + u^-1)`.
pub fn torus_knot_n2(n: u64) -> Result<LaurentPoly> {
    if n % 2 == 0 {
        return Err(Error::NotOdd(n));
    }
    LaurentPoly::u_plus_inverse(exp(n)).div_exact(&LaurentPoly::u_plus_inverse(1))
}

/// Two-component link `T(n, 2)`, `n` even: `(u^n - u^-n) / (u + u^-1)`.
pub fn torus_link_n2(n: u64) -> Result<LaurentPoly> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::NotEven(n));
    }
    LaurentPoly::u_minus_inverse(exp(n)).div_exact(&LaurentPoly::u_plus_inverse(1))
}

/// `T(n, 2)` invariant, dispatching on the parity of `n`.
pub fn torus_n2(n: u64) -> Result<LaurentPoly> {
    match n {
        0 => Err(Error::InvalidParams("n must be positive".into())),
        _ if n % 2 == 1 => torus_knot_n2(n),
        _ => torus_link_n2(n),
    }
}

fn skein_case(n: u64) -> Result<Option<Case>> {
    let lhs = torus_n2(n)? - torus_n2(n - 2)?;
    let rhs = LaurentPoly::u_minus_inverse(1) * torus_n2(n - 1)?;
    Ok((lhs != rhs).then(|| {
        Case::new(
            &[("n", exp(n))],
            render_laurent_text(&lhs, LaurentVar::Q),
            render_laurent_text(&rhs, LaurentVar::Q),
        )
    }))
}

/// Checks `D_{n,2} - D_{n-2,2} = (q^{1/2} - q^{-1/2}) D_{n-1,2}`: switching one
/// crossing of `T(n,2)` gives `T(n-2,2)`, smoothing it gives `T(n-1,2)`.
pub fn skein_family_check(n: u64) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("skein tower needs n >= 3, got {n}")));
    }
    let started = Instant::now();
    let mut report = VerificationReport::new("skein").with_range("n", exp(n), exp(n));
    if let Some(case) = skein_case(n)? {
        report.fail(case);
    }
    Ok(report.finish(started))
}

fn palindromy_case(n: u64) -> Result<Option<Case>> {
    let delta = torus_n2(n)?;
    let expected = if n % 2 == 1 { delta.clone() } else { -&delta };
    let bar = delta.bar();
    Ok((bar != expected).then(|| {
        Case::new(
            &[("n", exp(n))],
            render_laurent_text(&bar, LaurentVar::Q),
            render_laurent_text(&expected, LaurentVar::Q),
        )
    }))
}

/// Knots are fixed by `u -> 1/u`; links change sign.
pub fn palindromy_check(n: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("palindromy").with_range("n", exp(n), exp(n));
    if let Some(case) = palindromy_case(n)? {
        report.fail(case);
    }
    Ok(report.finish(started))
}

pub(crate) mod scan {
    use super::*;

    pub fn skein(n_max: u64) -> Result<VerificationReport> {
        if n_max < 3 {
            return Err(Error::InvalidParams(format!(
                "skein tower needs n >= 3, got n-max {n_max}"
            )));
        }
        let started = Instant::now();
        let mut report = VerificationReport::new("skein").with_range("n", 3, exp(n_max));
        let cases: Vec<Option<Case>> = (3..=n_max)
            .into_par_iter()
            .map(skein_case)
            .collect::<Result<_>>()?;
        cases.into_iter().flatten().for_each(|c| report.fail(c));
        Ok(report.finish(started))
    }

    pub fn palindromy(n_max: u64) -> Result<VerificationReport> {
        let started = Instant::now();
        let mut report = VerificationReport::new("palindromy").with_range("n", 1, exp(n_max));
        let cases: Vec<Option<Case>> = (1..=n_max)
            .into_par_iter()
            .map(palindromy_case)
            .collect::<Result<_>>()?;
        cases.into_iter().flatten().for_each(|c| report.fail(c));
        Ok(report.finish(started))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::Rational;

    fn torus(n: u64, l: u64) -> Result<LaurentPoly> {
        torus_alexander(TorusParams::new(n, l).unwrap())
    }

    fn delta3() -> LaurentPoly {
        LaurentPoly::from_ints(-2, &[1, 0, -1, 0, 1])
    }

    fn delta5() -> LaurentPoly {
        LaurentPoly::from_ints(-4, &[1, 0, -1, 0, 1, 0, -1, 0, 1])
    }

    #[test]
    fn general_formula_examples() {
        assert_eq!(torus(3, 2).unwrap(), delta3());
        assert_eq!(torus(5, 2).unwrap(), delta5());
        assert_eq!(torus(1, 2).unwrap(), LaurentPoly::one());
        assert_eq!(torus(2, 3).unwrap(), delta3());
    }

    #[test]
    fn non_coprime_is_rejected() {
        assert_eq!(torus(4, 2), Err(Error::NonCoprime { n: 4, l: 2, gcd: 2 }));
        assert_eq!(torus(6, 9), Err(Error::NonCoprime { n: 6, l: 9, gcd: 3 }));
        assert!(TorusParams::new(0, 2).is_err());
    }

    #[test]
    fn knot_examples() {
        assert_eq!(torus_knot_n2(1).unwrap(), LaurentPoly::one());
        assert_eq!(torus_knot_n2(3).unwrap(), delta3());
        assert_eq!(torus_knot_n2(5).unwrap(), delta5());
        assert_eq!(torus_knot_n2(4), Err(Error::NotOdd(4)));
    }

    #[test]
    fn link_examples() {
        assert_eq!(torus_link_n2(2).unwrap(), LaurentPoly::u_minus_inverse(1));
        assert_eq!(
            torus_link_n2(4).unwrap(),
            LaurentPoly::from_ints(-3, &[-1, 0, 1, 0, -1, 0, 1])
        );
        // Frozen after checking (u + 1/u) * result == u^6 - u^-6.
        let d6 = LaurentPoly::from_ints(-5, &[-1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1]);
        assert_eq!(
            &d6 * &LaurentPoly::u_plus_inverse(1),
            LaurentPoly::u_minus_inverse(6)
        );
        assert_eq!(torus_link_n2(6).unwrap(), d6);
        assert_eq!(torus_link_n2(3), Err(Error::NotEven(3)));
    }

    #[test]
    fn skein_examples() {
        // n = 3: (q - 1 + 1/q) - 1 = (u - 1/u)^2 = q - 2 + 1/q
        let lhs = delta3() - LaurentPoly::one();
        let m = LaurentPoly::u_minus_inverse(1);
        assert_eq!(lhs, &m * &m);
        assert_eq!(lhs, LaurentPoly::from_ints(-2, &[1, 0, -2, 0, 1]));
        assert!(skein_family_check(3).unwrap().passed());
        assert!(skein_family_check(4).unwrap().passed());
        assert!(skein_family_check(2).is_err());
    }

    #[test]
    fn palindromy_examples() {
        assert!(palindromy_check(5).unwrap().passed());
        assert!(palindromy_check(2).unwrap().passed());
        assert!(palindromy_check(99).unwrap().passed());
    }

    #[test]
    fn family_properties() {
        for n in (1..=99).step_by(2) {
            let k = torus_knot_n2(n).unwrap();
            assert_eq!(torus(n, 2).unwrap(), k);
            assert!(k.is_integral());
            assert_eq!(k.eval(&Rational::one()), Some(Rational::one()));
        }
        for n in (2..=98).step_by(2) {
            let l = torus_link_n2(n).unwrap();
            assert!(l.is_integral());
            assert_eq!(l.eval(&Rational::one()), Some(Rational::zero()));
        }
        for n in 1..=12u64 {
            for l in 1..=12u64 {
                if n.gcd(&l) == 1 {
                    assert_eq!(torus(n, l).unwrap(), torus(l, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn scans() {
        assert!(scan::skein(99).unwrap().passed());
        assert!(scan::skein(2).is_err());
        assert!(scan::palindromy(40).unwrap().passed());
    }
}
