//! Test-only helpers: a parser for hand-written polynomial literals and the
//! reference tables, kept independent of the library's own renderers.

#![allow(dead_code)]

use chebknot::{LaurentPoly, Polynomial, Rational};

/// Parses literals such as `16/81x^5 - 20/9x^3 + 5x`, `x^2`, `-1`.
/// Coefficients may be written as `a/b` directly before the variable.
pub fn poly(src: &str) -> Polynomial {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1i64, rest.to_string()),
            None => (1, term.trim_start_matches('+').to_string()),
        };
        let (coef, power) = match body.find('x') {
            None => (body.as_str(), 0usize),
            Some(pos) => {
                let power = match body[pos + 1..].strip_prefix('^') {
                    Some(p) => p.parse().unwrap(),
                    None => 1,
                };
                (&body[..pos], power)
            }
        };
        let c = if coef.is_empty() {
            Rational::one()
        } else {
            coef.parse::<Rational>().unwrap()
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] = &coeffs[power] + &(c * Rational::from(sign));
    }
    Polynomial::new(coeffs)
}

/// Laurent polynomial in `u` from `(exponent, integer coefficient)` terms.
pub fn laurent(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from(c))))
}

/// `(k, h, rows)` with `rows[n]` the published `T^(k,h)_n`, n = 0..=5.
pub fn published_tables() -> Vec<(u32, u32, [&'static str; 6])> {
    vec![
        (1, 1, ["1", "x", "2x^2-1", "4x^3-3x", "8x^4-8x^2+1", "16x^5-20x^3+5x"]),
        (2, 1, ["1", "2x", "4x^2-1", "8x^3-4x", "16x^4-12x^2+1", "32x^5-32x^3+6x"]),
        (1, 2, ["2", "x", "x^2-2", "x^3-3x", "x^4-4x^2+2", "x^5-5x^3+5x"]),
        (2, 2, ["1", "x", "x^2-1", "x^3-2x", "x^4-3x^2+1", "x^5-4x^3+3x"]),
        (
            1,
            3,
            ["3", "x", "2/3x^2-3", "4/9x^3-3x", "8/27x^4-8/3x^2+3", "16/81x^5-20/9x^3+5x"],
        ),
        (
            2,
            3,
            ["1", "2/3x", "4/9x^2-1", "8/27x^3-4/3x", "16/81x^4-12/9x^2+1", "32/243x^5-32/27x^3+2x"],
        ),
        (3, 1, ["1", "3x", "6x^2-1", "12x^3-5x", "24x^4-16x^2+1", "48x^5-44x^3+7x"]),
        (3, 2, ["0", "x", "x^2", "x^3-x", "x^4-2x^2", "x^5-3x^3+x"]),
    ]
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn ints(cs: &[i64]) -> Polynomial {
    Polynomial::from_ints(cs)
}

/// Parametric first-hyperkind rows instantiated at `k`.
pub fn standard_kind_k(k: i64) -> Vec<Polynomial> {
    vec![
        ints(&[1]),
        ints(&[0, k]),
        ints(&[-1, 0, 2 * k]),
        ints(&[0, -(k + 2), 0, 4 * k]),
        ints(&[1, 0, -4 * (k + 1), 0, 8 * k]),
        ints(&[0, k + 4, 0, -4 * (3 * k + 2), 0, 16 * k]),
    ]
}

/// Parametric second-hyperkind (monic) rows instantiated at `k`.
pub fn monic_kind_k(k: i64) -> Vec<Polynomial> {
    vec![
        ints(&[3 - k]),
        ints(&[0, 1]),
        ints(&[k - 3, 0, 1]),
        ints(&[0, k - 4, 0, 1]),
        ints(&[-(k - 3), 0, k - 5, 0, 1]),
        ints(&[0, -(2 * k - 7), 0, k - 6, 0, 1]),
    ]
}

/// Parametric first-kind rows in the hyperkind `h`.
pub fn first_kind_h(h: i64) -> Vec<Polynomial> {
    let z = Rational::zero;
    vec![
        Polynomial::new(vec![r(h, 1)]),
        ints(&[0, 1]),
        Polynomial::new(vec![r(-h, 1), z(), r(2, h)]),
        Polynomial::new(vec![z(), r(-3, 1), z(), r(4, h * h)]),
        Polynomial::new(vec![r(h, 1), z(), r(-8, h), z(), r(8, h.pow(3))]),
        Polynomial::new(vec![z(), r(5, 1), z(), r(-20, h * h), z(), r(16, h.pow(4))]),
    ]
}

/// Parametric second-kind rows in the hyperkind `h`.
pub fn second_kind_h(h: i64) -> Vec<Polynomial> {
    let z = Rational::zero;
    vec![
        ints(&[1]),
        Polynomial::new(vec![z(), r(2, h)]),
        Polynomial::new(vec![r(-1, 1), z(), r(4, h * h)]),
        Polynomial::new(vec![z(), r(-4, h), z(), r(8, h.pow(3))]),
        Polynomial::new(vec![r(1, 1), z(), r(-12, h * h), z(), r(16, h.pow(4))]),
        Polynomial::new(vec![z(), r(6, h), z(), r(-32, h.pow(3)), z(), r(32, h.pow(5))]),
    ]
}

/// General `(k, h)` rows in terms of the seeds `A`, `B`, with the last
/// term of row 5 being `(4A/h + B) x`.
pub fn general_rows(k: i64, h: i64) -> Vec<Polynomial> {
    let a = Rational::from(k - 1) - Rational::from((k - 2) * h);
    let b = Rational::from(k - 1) * r(2, h) - Rational::from(k - 2);
    let z = Rational::zero;
    let f = |n: i64, d: i64| r(n, d);
    vec![
        Polynomial::new(vec![a.clone()]),
        Polynomial::new(vec![z(), b.clone()]),
        Polynomial::new(vec![-&a, z(), f(2, h) * &b]),
        Polynomial::new(vec![
            z(),
            -(f(2, h) * &a + &b),
            z(),
            f(4, h * h) * &b,
        ]),
        Polynomial::new(vec![
            a.clone(),
            z(),
            -(f(4, h * h) * &a + f(4, h) * &b),
            z(),
            f(8, h.pow(3)) * &b,
        ]),
        Polynomial::new(vec![
            z(),
            f(4, h) * &a + &b,
            z(),
            -(f(8, h.pow(3)) * &a + f(12, h * h) * &b),
            z(),
            f(16, h.pow(4)) * &b,
        ]),
    ]
}

/// Published `T(n, 2)` invariants for n = 1..=5, in `u = q^{1/2}`.
pub fn published_alexander() -> Vec<(u64, LaurentPoly)> {
    vec![
        (1, laurent(&[(0, 1)])),
        (2, laurent(&[(1, 1), (-1, -1)])),
        (3, laurent(&[(2, 1), (0, -1), (-2, 1)])),
        (4, laurent(&[(3, 1), (1, -1), (-1, 1), (-3, -1)])),
        (5, laurent(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)])),
    ]
}
