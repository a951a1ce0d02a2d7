//! Error-free transformations for compensated polynomial evaluation.

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Compensated Horner scheme over coefficients given as `(hi, lo)` pairs in
/// ascending order. The result is as accurate as plain Horner carried out in
/// twice the working precision, then rounded once.
pub(crate) fn compensated_horner(coeffs: &[(f64, f64)], x: f64) -> f64 {
    let Some(&(top_hi, top_lo)) = coeffs.last() else {
        return 0.0;
    };
    let mut s = top_hi;
    let mut err = top_lo;
    for &(hi, lo) in coeffs.iter().rev().skip(1) {
        let (p, pe) = two_prod(s, x);
        let (sum, se) = two_sum(p, hi);
        s = sum;
        err = err.mul_add(x, pe + se + lo);
    }
    s + err
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ill_conditioned_cancellation() {
        // (x - 1)^7 expanded, evaluated close to its root.
        let c = [-1.0, 7.0, -21.0, 35.0, -35.0, 21.0, -7.0, 1.0];
        let pairs: Vec<_> = c.iter().map(|&v| (v, 0.0)).collect();
        let x = 1.0 + 1.0 / 1024.0;
        let exact = (1.0f64 / 1024.0).powi(7);
        let got = compensated_horner(&pairs, x);
        assert!(((got - exact) / exact).abs() < 1e-12);
    }

    #[test]
    fn empty_is_zero() {
        assert_eq!(compensated_horner(&[], 3.0), 0.0);
    }
}
